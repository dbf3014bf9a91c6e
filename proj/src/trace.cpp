#include "rsg/trace.hpp"

#include <ostream>

namespace rsg {

void TraceSink::emit(const nlohmann::json& record) {
    std::lock_guard<std::mutex> lock(mu_);
    (*out_) << record.dump() << '\n';
}

} // namespace rsg
