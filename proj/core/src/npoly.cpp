#include <knotmat/npoly.hpp>

namespace knotmat {

std::string NPolynomial::str(const char* symbol) const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        if (!out.empty()) out += v > 0 ? " + " : " - ";
        else if (v < 0) out += "-";
        Rational a = abs(v);
        if (a != 1 || e == 0) out += to_string(a);
        if (e > 0) {
            if (a != 1) out += "*";
            out += symbol;
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace knotmat
