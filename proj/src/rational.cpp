#include "toric/rational.hpp"

#include "toric/error.hpp"

#include <cctype>

namespace toric {

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error("SchemaError", "empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rat(Int(s), 1);
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw Error("SchemaError", "zero denominator in '" + text + "'");
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw Error("SchemaError", "malformed rational '" + text + "'");
    }
}

} // namespace toric
