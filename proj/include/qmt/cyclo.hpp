#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_M), power basis 1, z, ..., z^{phi(M)-1}
// modulo the M-th cyclotomic polynomial.  Mixed moduli promote to the lcm.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qmt {

struct CycloError : std::runtime_error {
  explicit CycloError(const std::string& what) : std::runtime_error(what) {}
};

// 2^8 keeps degrees small; promotion past this throws rather than degrade to floats.
inline constexpr int kMaxModulus = 256;

// Per-modulus data: cyclotomic polynomial and reduced powers z^k for k < max(M, 2 deg - 1).
struct CycloCtx {
  int M = 1;
  int deg = 1;                                  // phi(M)
  std::vector<mpz_class> phi;                   // monic, length deg+1
  std::vector<std::vector<mpq_class>> powers;   // powers[k] = z^k in the power basis

  static const CycloCtx& get(int M);            // cached, thread safe
};

class Cyclo {
 public:
  Cyclo() : m_(1), c_(1) {}                     // zero in Q(zeta_1) = Q
  explicit Cyclo(const mpq_class& r) : m_(1), c_{r} {}
  explicit Cyclo(long n) : m_(1), c_{mpq_class(n)} {}
  Cyclo(int modulus, std::vector<mpq_class, std::allocator<mpq_class>> coeffs);

  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(mpq_class(1)); }
  static Cyclo rational(const mpq_class& r) { return Cyclo(r); }
  static Cyclo zeta(int M, long k);             // zeta_M^k
  static Cyclo phase(const mpq_class& t);       // e^{2 pi i t}, t rational

  int modulus() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;                     // true also implies rational_value() valid
  mpq_class rational_value() const;             // throws if not rational

  Cyclo operator-() const;
  Cyclo conj() const;                           // z -> z^{-1}
  Cyclo inv() const;                            // throws CycloError on zero
  Cyclo pow(long e) const;

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& b) { *this = *this + b; return *this; }
  Cyclo& operator-=(const Cyclo& b) { *this = *this - b; return *this; }
  Cyclo& operator*=(const Cyclo& b) { *this = *this * b; return *this; }

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Drops to the smallest modulus actually needed when the value is rational;
  // otherwise keeps the current modulus.  Used to keep serialized moduli tidy.
  Cyclo compress() const;

  std::complex<double> embed() const;           // z -> exp(2 pi i / M)
  std::string str() const;                      // debug form

  // Rewrites the pair (a, b) over lcm(mod a, mod b).
  static void align(Cyclo& a, Cyclo& b);
  Cyclo promoted(int M) const;                  // to a multiple of modulus()

 private:
  int m_;
  std::vector<mpq_class> c_;                    // length phi(m_)
  void reduce_tail(std::vector<mpq_class>& v) const;
};

int euler_phi(int n);
long lcm_long(long a, long b);

}  // namespace qmt
