#pragma once

#include <string>
#include <vector>

namespace knotmat {

// Specification of a Gaussian mean <prod_i tr W_i> where each trace word W_i
// is a sequence of matrix labels. Single-matrix monomials use label 'A' only
// and are conventionally written by their powers, e.g. [3,3] for (tr M^3)^2.
class TraceMonomial {
public:
    // words use labels 'A' and 'B'; every word non-empty
    explicit TraceMonomial(std::vector<std::string> words);

    static TraceMonomial from_powers(const std::vector<int>& powers);

    // "3,3" or "[AB],[AA]"
    static TraceMonomial parse(const std::string& text);

    const std::vector<std::string>& words() const { return words_; }
    std::vector<int> trace_sizes() const;
    int total_legs() const { return legs_; }
    int trace_count() const { return static_cast<int>(words_.size()); }
    bool single_matrix() const { return single_; }

    // leg labels concatenated trace by trace
    std::vector<char> leg_labels() const;

    std::string str() const;

private:
    std::vector<std::string> words_;
    int legs_ = 0;
    bool single_ = true;
};

} // namespace knotmat
