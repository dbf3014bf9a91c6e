#pragma once

#include <cstddef>
#include <vector>

#include "rsg/dfa.hpp"
#include "rsg/teacher.hpp"

namespace rsg {

// Boolean observation table with the distinct-rows discipline: the access
// word set X only ever contains pairwise distinct rows, so the classic
// consistency condition holds by construction. Counterexamples are processed
// by binary search for a distinguishing suffix; X stays prefix-closed because
// rows are only added by promoting one-letter extensions.
class ObservationTable {
public:
    enum class Promotion { First, Last };

    ObservationTable(const Alphabet& alphabet, Teacher& teacher);

    bool closed() const;
    void close(Promotion promotion = Promotion::First);

    struct Hypothesis {
        Dfa dfa;
        std::vector<Word> access; // access word per DFA state
    };

    // Quotient DFA of a closed table; minimal by construction since every two
    // states are separated by some suffix in Y.
    Hypothesis hypothesis() const;

    // Rivest-Schapire step: find one distinguishing suffix of w and add it as
    // a column. Requires Mem(w) != accepts(hypothesis, w).
    void process_counterexample(const Word& w, const Hypothesis& hyp);

    int row_count() const { return static_cast<int>(xs_.size()); }
    int column_count() const { return static_cast<int>(ys_.size()); }
    const std::vector<Word>& access_words() const { return xs_; }
    const std::vector<Word>& suffixes() const { return ys_; }

    // Stored entry for x in X u X.Sigma (x given as a literal word) and y in Y.
    bool entry(const Word& x, const Word& y) const;

    std::size_t membership_queries() const { return queries_; }
    int last_counterexample_probes() const { return last_probes_; }

private:
    using Row = std::vector<char>;

    void fill_missing();
    bool ask(const Word& w);
    int find_matching_row(const Row& row) const;

    const Alphabet* alphabet_;
    Teacher* teacher_;
    std::vector<Word> xs_;
    std::vector<Word> ys_;
    std::vector<Row> x_rows_;                   // |X| x |Y|
    std::vector<std::vector<Row>> ext_rows_;    // |X| x |Sigma| x |Y|
    std::size_t queries_ = 0;
    int last_probes_ = 0;
};

} // namespace rsg
