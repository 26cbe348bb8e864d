#include "cospec/numbers.hpp"

#include <sstream>

#include "cospec/errors.hpp"

namespace cospec {

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("malformed rational literal: " + s);
    if (r.get_den() == 0) throw Error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

bool poly_is_integral(const Poly& p) {
    for (const Rat& c : p)
        if (!is_integral(c)) return false;
    return true;
}

std::string poly_to_string(const Poly& p) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << ", ";
        out << to_string(p[i]);
    }
    out << "]";
    return out.str();
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc = 0;
    for (size_t i = p.size(); i-- > 0;) {
        acc *= x;
        acc += p[i];
    }
    return acc;
}

}  // namespace cospec
