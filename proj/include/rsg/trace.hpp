#pragma once

#include <iosfwd>
#include <mutex>
#include <string>

#include <json.hpp>

namespace rsg {

// Thread-safe json-lines writer for learner/teacher progress records.
class TraceSink {
public:
    explicit TraceSink(std::ostream& out) : out_(&out) {}

    void emit(const nlohmann::json& record);

private:
    std::mutex mu_;
    std::ostream* out_;
};

} // namespace rsg
