#include "rsg/observation_table.hpp"

#include <algorithm>
#include <map>

#include "rsg/automaton_ops.hpp"
#include "rsg/errors.hpp"

namespace rsg {

namespace {

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word concat(const Word& a, Symbol s, const Word& b) {
    Word out = a;
    out.push_back(s);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

ObservationTable::ObservationTable(const Alphabet& alphabet, Teacher& teacher)
    : alphabet_(&alphabet), teacher_(&teacher) {
    xs_.push_back(Word{});
    ys_.push_back(Word{});
    x_rows_.emplace_back();
    ext_rows_.emplace_back(static_cast<std::size_t>(alphabet.size()));
    fill_missing();
}

bool ObservationTable::ask(const Word& w) {
    ++queries_;
    return teacher_->membership(w);
}

void ObservationTable::fill_missing() {
    const std::size_t columns = ys_.size();
    std::vector<Word> batch;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        for (std::size_t j = x_rows_[i].size(); j < columns; ++j)
            batch.push_back(concat(xs_[i], ys_[j]));
        for (Symbol a = 0; a < alphabet_->size(); ++a)
            for (std::size_t j = ext_rows_[i][static_cast<std::size_t>(a)].size(); j < columns;
                 ++j)
                batch.push_back(concat(xs_[i], a, ys_[j]));
    }
    if (batch.empty()) return;
    teacher_->prime(batch);
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        for (std::size_t j = x_rows_[i].size(); j < columns; ++j)
            x_rows_[i].push_back(ask(concat(xs_[i], ys_[j])) ? 1 : 0);
        for (Symbol a = 0; a < alphabet_->size(); ++a) {
            Row& row = ext_rows_[i][static_cast<std::size_t>(a)];
            for (std::size_t j = row.size(); j < columns; ++j)
                row.push_back(ask(concat(xs_[i], a, ys_[j])) ? 1 : 0);
        }
    }
}

int ObservationTable::find_matching_row(const Row& row) const {
    for (std::size_t i = 0; i < x_rows_.size(); ++i)
        if (x_rows_[i] == row) return static_cast<int>(i);
    return -1;
}

bool ObservationTable::closed() const {
    for (std::size_t i = 0; i < xs_.size(); ++i)
        for (Symbol a = 0; a < alphabet_->size(); ++a)
            if (find_matching_row(ext_rows_[i][static_cast<std::size_t>(a)]) < 0) return false;
    return true;
}

void ObservationTable::close(Promotion promotion) {
    while (true) {
        int promote_x = -1;
        Symbol promote_a = -1;
        for (std::size_t i = 0; i < xs_.size(); ++i) {
            for (Symbol a = 0; a < alphabet_->size(); ++a) {
                if (find_matching_row(ext_rows_[i][static_cast<std::size_t>(a)]) < 0) {
                    promote_x = static_cast<int>(i);
                    promote_a = a;
                    if (promotion == Promotion::First) goto promote;
                }
            }
        }
    promote:
        if (promote_x < 0) return;
        // The promoted extension keeps X prefix-closed (its prefix is in X)
        // and pairwise distinct (its row matched nothing).
        xs_.push_back(concat(xs_[static_cast<std::size_t>(promote_x)], promote_a, Word{}));
        x_rows_.push_back(ext_rows_[static_cast<std::size_t>(promote_x)]
                                   [static_cast<std::size_t>(promote_a)]);
        ext_rows_.emplace_back(static_cast<std::size_t>(alphabet_->size()));
        fill_missing();
    }
}

ObservationTable::Hypothesis ObservationTable::hypothesis() const {
    const int n = static_cast<int>(xs_.size());
    const int sigma = alphabet_->size();
    std::vector<State> delta(static_cast<std::size_t>(n) * static_cast<std::size_t>(sigma));
    std::vector<bool> finals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        finals[static_cast<std::size_t>(i)] = x_rows_[static_cast<std::size_t>(i)][0] != 0;
        for (Symbol a = 0; a < sigma; ++a) {
            int target = find_matching_row(
                ext_rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]);
            if (target < 0)
                throw ContractError("hypothesis requested from an unclosed table");
            delta[static_cast<std::size_t>(i) * static_cast<std::size_t>(sigma) +
                  static_cast<std::size_t>(a)] = target;
        }
    }
    return Hypothesis{Dfa(*alphabet_, n, 0, std::move(delta), std::move(finals)), xs_};
}

void ObservationTable::process_counterexample(const Word& w, const Hypothesis& hyp) {
    const int m = static_cast<int>(w.size());
    last_probes_ = 0;

    // alpha(i) = Mem(access(state after w[0..i)) . w[i..)); monotone bisection
    // between the differing endpoints finds a distinguishing split.
    auto alpha = [&](int i) {
        State q = hyp.dfa.initial();
        for (int k = 0; k < i; ++k) q = hyp.dfa.next(q, w[static_cast<std::size_t>(k)]);
        Word probe = hyp.access[static_cast<std::size_t>(q)];
        probe.insert(probe.end(), w.begin() + i, w.end());
        ++last_probes_;
        return ask(probe);
    };

    const bool alpha_lo = alpha(0);
    const bool alpha_hi = alpha(m);
    if (alpha_lo == alpha_hi)
        throw ContractError("teacher returned a word that is not a counterexample");

    int lo = 0;
    int hi = m;
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (alpha(mid) == alpha_lo)
            lo = mid;
        else
            hi = mid;
    }

    Word suffix(w.begin() + lo + 1, w.end());
    if (std::find(ys_.begin(), ys_.end(), suffix) != ys_.end())
        throw ContractError("distinguishing suffix already present; table incoherent");
    ys_.push_back(std::move(suffix));
    fill_missing();
}

bool ObservationTable::entry(const Word& x, const Word& y) const {
    auto column = std::find(ys_.begin(), ys_.end(), y);
    if (column == ys_.end()) throw ContractError("unknown suffix");
    std::size_t j = static_cast<std::size_t>(column - ys_.begin());
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (xs_[i] == x) return x_rows_[i][j] != 0;
        if (!x.empty() && x.size() == xs_[i].size() + 1 &&
            std::equal(xs_[i].begin(), xs_[i].end(), x.begin()))
            return ext_rows_[i][static_cast<std::size_t>(x.back())][j] != 0;
    }
    throw ContractError("unknown access word");
}

} // namespace rsg
