#include <knotmat/trace_monomial.hpp>

#include <stdexcept>

namespace knotmat {

TraceMonomial::TraceMonomial(std::vector<std::string> words) : words_(std::move(words)) {
    if (words_.empty()) throw std::invalid_argument("trace monomial needs at least one trace");
    for (const auto& w : words_) {
        if (w.empty()) throw std::invalid_argument("empty trace word");
        for (char ch : w) {
            if (ch != 'A' && ch != 'B')
                throw std::invalid_argument(std::string("unknown matrix label '") + ch + "'");
            if (ch == 'B') single_ = false;
        }
        legs_ += static_cast<int>(w.size());
    }
}

TraceMonomial TraceMonomial::from_powers(const std::vector<int>& powers) {
    std::vector<std::string> words;
    words.reserve(powers.size());
    for (int p : powers) {
        if (p < 1) throw std::invalid_argument("trace power must be >= 1");
        words.emplace_back(static_cast<std::size_t>(p), 'A');
    }
    return TraceMonomial(std::move(words));
}

TraceMonomial TraceMonomial::parse(const std::string& text) {
    std::vector<std::string> words;
    std::size_t i = 0;
    auto skip_comma = [&] {
        if (i < text.size() && text[i] == ',') ++i;
    };
    if (text.find('[') == std::string::npos) {
        // comma list of powers, e.g. "8,4,4"
        std::vector<int> powers;
        while (i < text.size()) {
            std::size_t used = 0;
            int p = std::stoi(text.substr(i), &used);
            powers.push_back(p);
            i += used;
            skip_comma();
        }
        if (powers.empty()) throw std::invalid_argument("empty monomial '" + text + "'");
        return from_powers(powers);
    }
    // bracketed words, e.g. "[AB],[AA]"
    while (i < text.size()) {
        if (text[i] != '[') throw std::invalid_argument("expected '[' in '" + text + "'");
        auto close = text.find(']', i);
        if (close == std::string::npos) throw std::invalid_argument("missing ']' in '" + text + "'");
        words.push_back(text.substr(i + 1, close - i - 1));
        i = close + 1;
        skip_comma();
    }
    return TraceMonomial(std::move(words));
}

std::vector<int> TraceMonomial::trace_sizes() const {
    std::vector<int> out;
    out.reserve(words_.size());
    for (const auto& w : words_) out.push_back(static_cast<int>(w.size()));
    return out;
}

std::vector<char> TraceMonomial::leg_labels() const {
    std::vector<char> out;
    out.reserve(static_cast<std::size_t>(legs_));
    for (const auto& w : words_) out.insert(out.end(), w.begin(), w.end());
    return out;
}

std::string TraceMonomial::str() const {
    std::string out;
    for (const auto& w : words_) {
        if (!out.empty()) out += ',';
        if (single_)
            out += std::to_string(w.size());
        else
            out += "[" + w + "]";
    }
    return out;
}

} // namespace knotmat
