#include "qmt/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qmt {

int euler_phi(int n) {
  int result = n, p = 2, m = n;
  while (p * p <= m) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
    ++p;
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

namespace {

using ZPoly = std::vector<mpz_class>;  // low degree first

int degree(const ZPoly& p) {
  for (int i = int(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Exact division of integer polynomials with monic divisor.
ZPoly exact_div(ZPoly num, const ZPoly& den) {
  int dn = degree(num), dd = degree(den);
  ZPoly q(dn - dd + 1, mpz_class(0));
  for (int k = dn - dd; k >= 0; --k) {
    mpz_class c = num[k + dd];
    if (c == 0) continue;
    q[k] = c;
    for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  return q;
}

ZPoly cyclotomic_poly(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built bottom up.
  std::map<int, ZPoly> memo;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    ZPoly num(d + 1, mpz_class(0));
    num[0] = -1;
    num[d] = 1;
    ZPoly acc{mpz_class(1)};
    for (auto& [e, pe] : memo) {
      if (d % e != 0) continue;
      // acc *= pe
      ZPoly prod(acc.size() + pe.size() - 1, mpz_class(0));
      for (size_t i = 0; i < acc.size(); ++i)
        for (size_t j = 0; j < pe.size(); ++j) prod[i + j] += acc[i] * pe[j];
      acc = std::move(prod);
    }
    memo[d] = exact_div(std::move(num), acc);
  }
  return memo[n];
}

std::unique_ptr<CycloCtx> build_ctx(int M) {
  auto ctx = std::make_unique<CycloCtx>();
  ctx->M = M;
  ctx->deg = euler_phi(M);
  ctx->phi = cyclotomic_poly(M);
  int d = ctx->deg;
  int count = std::max(M, 2 * d - 1);
  ctx->powers.assign(count, {});
  std::vector<mpq_class> cur(d, mpq_class(0));
  cur[0] = 1;
  ctx->powers[0] = cur;
  for (int k = 1; k < count; ++k) {
    std::vector<mpq_class> nxt(d, mpq_class(0));
    mpq_class top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (top != 0) {
      for (int i = 0; i < d; ++i) nxt[i] -= top * mpq_class(ctx->phi[i]);
    }
    cur = std::move(nxt);
    ctx->powers[k] = cur;
  }
  return ctx;
}

std::mutex g_ctx_mutex;
std::map<int, std::unique_ptr<CycloCtx>>& ctx_cache() {
  static std::map<int, std::unique_ptr<CycloCtx>> cache;
  return cache;
}

}  // namespace

const CycloCtx& CycloCtx::get(int M) {
  if (M < 1 || M > kMaxModulus)
    throw CycloError("cyclotomic modulus out of range: " + std::to_string(M));
  std::lock_guard<std::mutex> lock(g_ctx_mutex);
  auto& cache = ctx_cache();
  auto it = cache.find(M);
  if (it == cache.end()) it = cache.emplace(M, build_ctx(M)).first;
  return *it->second;
}

Cyclo::Cyclo(int modulus, std::vector<mpq_class> coeffs) : m_(modulus), c_(std::move(coeffs)) {
  const CycloCtx& ctx = CycloCtx::get(m_);
  if (int(c_.size()) != ctx.deg)
    throw CycloError("coefficient vector has wrong length for modulus " + std::to_string(m_));
}

Cyclo Cyclo::zeta(int M, long k) {
  const CycloCtx& ctx = CycloCtx::get(M);
  long r = ((k % M) + M) % M;
  return Cyclo(M, ctx.powers[size_t(r)]);
}

Cyclo Cyclo::phase(const mpq_class& t) {
  mpq_class u = t;
  u.canonicalize();
  mpz_class den = u.get_den();
  if (!den.fits_sint_p() || den.get_si() > kMaxModulus)
    throw CycloError("phase denominator exceeds modulus bound");
  int M = int(den.get_si());
  mpz_class num = u.get_num();
  mpz_class r = ((num % M) + M) % M;
  return zeta(M, r.get_si());
}

bool Cyclo::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Cyclo::rational_value() const {
  if (!is_rational()) throw CycloError("value is not rational");
  return c_[0];
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclo Cyclo::promoted(int M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw CycloError("promotion target is not a multiple of modulus");
  const CycloCtx& ctx = CycloCtx::get(M);
  int stride = M / m_;
  std::vector<mpq_class> out(ctx.deg, mpq_class(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& pw = ctx.powers[k * size_t(stride)];
    for (int i = 0; i < ctx.deg; ++i) out[i] += c_[k] * pw[i];
  }
  return Cyclo(M, std::move(out));
}

void Cyclo::align(Cyclo& a, Cyclo& b) {
  if (a.m_ == b.m_) return;
  long l = lcm_long(a.m_, b.m_);
  if (l > kMaxModulus)
    throw CycloError("modulus overflow: lcm(" + std::to_string(a.m_) + "," +
                     std::to_string(b.m_) + ") exceeds " + std::to_string(kMaxModulus));
  a = a.promoted(int(l));
  b = b.promoted(int(l));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  Cyclo x = a, y = b;
  Cyclo::align(x, y);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
  Cyclo x = a, y = b;
  Cyclo::align(x, y);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
  return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  Cyclo x = a, y = b;
  Cyclo::align(x, y);
  const CycloCtx& ctx = CycloCtx::get(x.m_);
  int d = ctx.deg;
  std::vector<mpq_class> conv(2 * d - 1, mpq_class(0));
  for (int i = 0; i < d; ++i) {
    if (x.c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y.c_[j] == 0) continue;
      conv[i + j] += x.c_[i] * y.c_[j];
    }
  }
  std::vector<mpq_class> out(d, mpq_class(0));
  for (int i = 0; i < d; ++i) out[i] = conv[i];
  for (int k = d; k < 2 * d - 1; ++k) {
    if (conv[k] == 0) continue;
    const auto& pw = ctx.powers[k];
    for (int i = 0; i < d; ++i) out[i] += conv[k] * pw[i];
  }
  return Cyclo(x.m_, std::move(out));
}

namespace {

using QPoly = std::vector<mpq_class>;

int qdegree(const QPoly& p) {
  for (int i = int(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q * b
  QPoly r = a;
  size_t need = q.size() + b.size();
  if (r.size() < need) r.resize(need, mpq_class(0));
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  }
  return r;
}

QPoly qdiv(const QPoly& num, const QPoly& den) {
  int dn = qdegree(num), dd = qdegree(den);
  if (dn < dd) return {mpq_class(0)};
  QPoly q(dn - dd + 1, mpq_class(0));
  QPoly rem = num;
  for (int k = dn - dd; k >= 0; --k) {
    mpq_class c = rem[k + dd] / den[dd];
    q[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= c * den[i];
  }
  return q;
}

}  // namespace

Cyclo Cyclo::inv() const {
  if (is_zero()) throw CycloError("division by zero");
  if (is_rational()) {
    std::vector<mpq_class> out(c_.size(), mpq_class(0));
    out[0] = mpq_class(1) / c_[0];
    return Cyclo(m_, std::move(out));
  }
  const CycloCtx& ctx = CycloCtx::get(m_);
  QPoly r0(ctx.phi.size());
  for (size_t i = 0; i < ctx.phi.size(); ++i) r0[i] = mpq_class(ctx.phi[i]);
  QPoly r1 = c_;
  QPoly s0{mpq_class(0)}, s1{mpq_class(1)};
  while (qdegree(r1) >= 0) {
    QPoly q = qdiv(r0, r1);
    QPoly r2 = qsub_mul(r0, q, r1);
    QPoly s2 = qsub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant (Phi_M is irreducible): s0 * this == r0 mod Phi.
  mpq_class scale = mpq_class(1) / r0[0];
  std::vector<mpq_class> out(ctx.deg, mpq_class(0));
  for (size_t i = 0; i < s0.size() && i < size_t(ctx.deg); ++i) out[i] = s0[i] * scale;
  return Cyclo(m_, std::move(out));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclo acc = Cyclo::one();
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Cyclo Cyclo::conj() const {
  const CycloCtx& ctx = CycloCtx::get(m_);
  std::vector<mpq_class> out(ctx.deg, mpq_class(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    size_t idx = (m_ - long(k)) % m_;
    const auto& pw = ctx.powers[idx];
    for (int i = 0; i < ctx.deg; ++i) out[i] += c_[k] * pw[i];
  }
  return Cyclo(m_, std::move(out));
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  Cyclo x = a, y = b;
  Cyclo::align(x, y);
  for (size_t i = 0; i < x.c_.size(); ++i)
    if (x.c_[i] != y.c_[i]) return false;
  return true;
}

Cyclo Cyclo::compress() const {
  if (is_rational() && m_ != 1) return Cyclo(c_[0]);
  return *this;
}

std::complex<double> Cyclo::embed() const {
  const double tau = 6.283185307179586476925286766559;
  std::complex<double> z = std::polar(1.0, tau / double(m_));
  std::complex<double> acc(0.0, 0.0);
  for (int i = int(c_.size()) - 1; i >= 0; --i) acc = acc * z + std::complex<double>(c_[i].get_d(), 0.0);
  return acc;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  os << "m" << m_ << ":[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace qmt
