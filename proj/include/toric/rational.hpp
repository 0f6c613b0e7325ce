#ifndef TORIC_RATIONAL_HPP
#define TORIC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize two-argument constructions; route all
// num/den construction through here.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Serialized form used in all reports: "num/den" with den >= 1.
std::string rat_to_string(const Rat& r);

// Accepts "num", "num/den" and surrounding whitespace; throws Error("SchemaError").
Rat rat_from_string(const std::string& text);

inline double to_double(const Rat& r) { return r.get_d(); }

} // namespace toric

#endif
