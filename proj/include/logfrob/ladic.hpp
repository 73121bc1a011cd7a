#ifndef LOGFROB_LADIC_HPP
#define LOGFROB_LADIC_HPP

#include <gmpxx.h>

#include <string>

#include "logfrob/error.hpp"

namespace logfrob {

// Working precision for truncated l-adic arithmetic: residues live in
// Z/l^digits, and results of analytic operations are certified down to
// digits - guard digits.
struct Precision {
    long ell;
    int digits;
    int guard;

    Precision(long ell, int digits, int guard = -1);

    static int default_guard(long ell, int digits);

    int certified_digits() const { return digits - guard; }

    // l^digits
    const mpz_class& modulus() const { return modulus_; }

    bool operator==(const Precision& other) const {
        return ell == other.ell && digits == other.digits && guard == other.guard;
    }

  private:
    mpz_class modulus_;
};

mpz_class pow_ui(long base, unsigned long exp);

// Valuation of a nonzero residue; returns `cap` for residue 0 (all stored
// digits vanish, so the true valuation is only known to be >= cap).
long residue_valuation(const mpz_class& r, long ell, long cap);

class LAdicInt {
  public:
    LAdicInt(mpz_class value, Precision prec);

    const mpz_class& residue() const { return residue_; }
    const Precision& precision() const { return prec_; }
    long ell() const { return prec_.ell; }
    int digits() const { return prec_.digits; }

    bool is_zero() const { return residue_ == 0; }
    bool is_one() const { return residue_ == 1; }
    bool is_unit() const;

    // v_l of the stored residue, capped at digits.
    long valuation() const { return residue_valuation(residue_, prec_.ell, prec_.digits); }

    LAdicInt reduced(int digits) const;

    LAdicInt operator+(const LAdicInt& other) const;
    LAdicInt operator-(const LAdicInt& other) const;
    LAdicInt operator*(const LAdicInt& other) const;
    LAdicInt operator-() const;
    LAdicInt inverse() const;

    // Congruence at the finer of the two stored precisions is an error;
    // comparison happens at the coarser one.
    bool congruent(const LAdicInt& other) const;

    // "21 mod 3^3"
    std::string str() const;

  private:
    mpz_class residue_;
    Precision prec_;
};

// x = l^val * unit with unit a stored unit residue; represents elements of
// Q_l^x up to the stored precision of the unit part.
struct LAdicNum {
    long val;
    LAdicInt unit;

    LAdicNum(long val, LAdicInt unit);

    LAdicNum mul(const LAdicNum& other) const;
    LAdicNum inv() const;

    std::string str() const;
};

// Torsion part: the unique (l-1)st (resp. {+-1} for l = 2) root of unity
// congruent to u. Requires u to be a unit.
LAdicInt teichmuller(const LAdicInt& u);

// Principal part <u> = u * teichmuller(u)^{-1}; lands in 1 + lZ_l
// (1 + 4Z_2 for l = 2).
LAdicInt principal_part(const LAdicInt& u);

// Iwasawa logarithm of x, evaluated through the principal part of the unit
// component (so Log(l) = Log(zeta) = 0). The series runs at the precision of
// x.unit; if accumulated division losses push the certified digits of the
// result below out.certified_digits(), throws PrecisionLoss. The returned
// value carries precision `out` with upper digits possibly uncertified.
LAdicInt iwasawa_log(const LAdicNum& x, const Precision& out);

// u^t for u principal; t is read modulo l^{u.digits}. Well defined because
// principal units form a pro-l group.
LAdicInt pow_ladic(const LAdicInt& u, const LAdicInt& t);
LAdicInt pow_ladic(const LAdicInt& u, const mpz_class& t);

// Extra working digits needed so that rational-input entry points can run
// the log series and one series division and still be exact at `digits`.
int internal_pad(long ell, int digits);

// Residue-level primitives shared by the higher modules. All take and
// return representatives in [0, modulus).
mpz_class teichmuller_residue(const mpz_class& u, long ell, const mpz_class& modulus, int digits);
mpz_class principal_residue(const mpz_class& u, long ell, const mpz_class& modulus, int digits);

struct LogSeries {
    mpz_class value;
    long loss; // digits lost to divisions by powers of ell
};

// log(y) for a principal residue y, summed mod ell^digits.
LogSeries log_principal_series(const mpz_class& y, long ell, int digits);

} // namespace logfrob

#endif
