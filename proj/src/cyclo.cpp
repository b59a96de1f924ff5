#include "skein/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "interval.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}


// Exact division by a monic polynomial.
IntPoly divide_exact(IntPoly f, const IntPoly& g) {
  const std::size_t dg = g.size() - 1;
  if (f.size() < g.size()) return {0};
  IntPoly quotient(f.size() - dg, 0);
  for (std::size_t k = f.size(); k-- > dg;) {
    const mpz_class c = f[k];
    quotient[k - dg] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dg; ++i) f[k - dg + i] -= c * g[i];
  }
  trim(quotient);
  return quotient;
}

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "cyclotomic index must be positive");
  IntPoly f(n + 1, 0);
  f[0] = -1;
  f[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) f = divide_exact(f, cyclotomic_polynomial(d));
  }
  return f;
}

CyclotomicField::CyclotomicField(int p) : p_(p) {
  if (p < 1) throw Error(ErrorKind::invalid_level, "field level must be positive");
  modulus_ = cyclotomic_polynomial(2 * p);
  const int deg = degree();
  powers_.reserve(2 * p);
  IntPoly current(deg, 0);
  current[0] = 1;
  for (int k = 0; k < 2 * p; ++k) {
    powers_.push_back(current);
    // multiply by x and fold x^deg = -(modulus - x^deg)
    mpz_class top = current[deg - 1];
    for (int i = deg - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0)
      for (int i = 0; i < deg; ++i) current[i] -= top * modulus_[i];
  }
}

const std::vector<mpz_class>& CyclotomicField::power(long k) const {
  return powers_[static_cast<std::size_t>(floor_mod(k, 2L * p_))];
}

std::shared_ptr<const CyclotomicField> cyclotomic_field(int p) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[p];
  if (!slot) slot = std::make_shared<const CyclotomicField>(p);
  return slot;
}

// --- CycloNum --------------------------------------------------------------

CycloNum::CycloNum(std::shared_ptr<const CyclotomicField> field)
    : field_(std::move(field)), coeffs_(field_->degree(), 0) {}

CycloNum::CycloNum(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(field_->degree(), 0) {
  // Accept any length and reduce via the power table.
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& pw = field_->power(static_cast<long>(k));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (pw[i] != 0) coeffs_[i] += coeffs[k] * pw[i];
  }
}

CycloNum CycloNum::zero(int p) { return CycloNum(cyclotomic_field(p)); }

CycloNum CycloNum::one(int p) { return rational(p, 1); }

CycloNum CycloNum::rational(int p, const mpq_class& value) {
  CycloNum out(cyclotomic_field(p));
  out.coeffs_[0] = value;
  return out;
}

CycloNum CycloNum::root_power(int p, long k) {
  CycloNum out(cyclotomic_field(p));
  const auto& pw = out.field_->power(k);
  for (std::size_t i = 0; i < pw.size(); ++i) out.coeffs_[i] = pw[i];
  return out;
}

bool CycloNum::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_one() const noexcept {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CycloNum::require_same_field(const CycloNum& other) const {
  if (field_->p() != other.field_->p()) {
    throw Error(ErrorKind::invalid_argument, "mixing elements of Q(A) for p=" + std::to_string(p()) +
                                                 " and p=" + std::to_string(other.p()));
  }
}

CycloNum CycloNum::operator-() const {
  CycloNum out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  a.require_same_field(b);
  const std::size_t deg = a.coeffs_.size();
  std::vector<mpq_class> product(2 * deg - 1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j)
      if (b.coeffs_[j] != 0) product[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CycloNum(a.field_, std::move(product));
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) { return *this = *this * rhs; }

CycloNum& CycloNum::operator*=(const mpq_class& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& rhs) { return *this = *this * rhs.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
  return a.field_->p() == b.field_->p() && a.coeffs_ == b.coeffs_;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero");
  const int n = static_cast<int>(coeffs_.size());
  // Solve M y = e_0 where column j of M holds the coordinates of this * A^j.
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1, 0));
  for (int j = 0; j < n; ++j) {
    const CycloNum col = *this * root_power(p(), j);
    for (int i = 0; i < n; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::division_by_zero, "singular multiplication map");
    std::swap(m[c], m[pivot]);
    const mpq_class inv = 1 / m[c][c];
    for (int k = c; k <= n; ++k) m[c][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  CycloNum out(field_);
  for (int i = 0; i < n; ++i) out.coeffs_[i] = m[i][n];
  return out;
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result = one(p());
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycloNum CycloNum::galois(long t) const {
  const long order = field_->order();
  if (std::gcd(floor_mod(t, order), order) != 1) {
    throw Error(ErrorKind::invalid_argument,
                "A -> A^" + std::to_string(t) + " is not an automorphism for p=" + std::to_string(p()));
  }
  std::vector<mpq_class> image(order, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) image[floor_mod(static_cast<long>(k) * t, order)] += coeffs_[k];
  return CycloNum(field_, std::move(image));
}

std::string CycloNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    const mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "A";
    if (k > 1) out << "^" << k;
  }
  return first ? "0" : out.str();
}

// --- quantum integers -------------------------------------------------------

CycloNum quantum_integer(const Level& level, int m) {
  const int p = level.p();
  const CycloNum denominator = CycloNum::root_power(p, 2) - CycloNum::root_power(p, -2);
  if (denominator.is_zero()) throw Error(ErrorKind::division_by_zero, "A^2 = A^-2");
  return (CycloNum::root_power(p, 2L * m) - CycloNum::root_power(p, -2L * m)) / denominator;
}

CycloNum quantum_factorial(const Level& level, int m) {
  if (m < 0) throw Error(ErrorKind::invalid_argument, "quantum factorial of a negative integer");
  CycloNum out = CycloNum::one(level.p());
  for (int k = 2; k <= m; ++k) out *= quantum_integer(level, k);
  return out;
}

QuantumTable::QuantumTable(const Level& level, int max_m) {
  if (max_m < 0) max_m = 0;
  const int p = level.p();
  const CycloNum inv_denominator = (CycloNum::root_power(p, 2) - CycloNum::root_power(p, -2)).inverse();
  integers_.reserve(max_m + 1);
  factorials_.reserve(max_m + 1);
  for (int m = 0; m <= max_m; ++m) {
    integers_.push_back((CycloNum::root_power(p, 2L * m) - CycloNum::root_power(p, -2L * m)) *
                        inv_denominator);
    factorials_.push_back(m == 0 ? CycloNum::one(p) : factorials_.back() * integers_.back());
  }
}

const CycloNum& QuantumTable::integer(int m) const {
  if (m < 0 || m > max_m()) throw Error(ErrorKind::index_out_of_range, "quantum table index " + std::to_string(m));
  return integers_[m];
}

const CycloNum& QuantumTable::factorial(int m) const {
  if (m < 0 || m > max_m()) throw Error(ErrorKind::index_out_of_range, "quantum table index " + std::to_string(m));
  return factorials_[m];
}

// --- embeddings -------------------------------------------------------------

RootSelector::RootSelector(int p, int ell) : p_(p), ell_(ell) {
  if (p < 1 || ell < 1 || ell >= 2 * p || std::gcd(ell, 2 * p) != 1) {
    throw Error(ErrorKind::invalid_argument,
                "ell=" + std::to_string(ell) + " does not select a primitive 2p-th root for p=" + std::to_string(p));
  }
}

RootSelector RootSelector::unitary(int p) {
  if (p % 2 == 0) return RootSelector(p, 1);
  int ell = (p + 1) / 2;
  if (((p - 1) / 2) % 2 == 1) ell += p;
  return RootSelector(p, ell % (2 * p));
}

std::vector<RootSelector> RootSelector::all(int p) {
  std::vector<RootSelector> out;
  for (int ell = 1; ell < 2 * p; ++ell)
    if (std::gcd(ell, 2 * p) == 1) out.emplace_back(p, ell);
  return out;
}

struct RealEmbedding::Cosines {
  std::vector<detail::Interval> values;
};

namespace {

std::vector<detail::Interval> cosine_table(const RootSelector& root, long precision) {
  const long order = 2L * root.p();
  std::vector<detail::Interval> table;
  table.reserve(order);
  for (long k = 0; k < order; ++k) {
    detail::Interval cosine(precision);
    cosine.set_cos_pi_fraction(floor_mod(k * root.ell(), order), root.p());
    table.push_back(std::move(cosine));
  }
  return table;
}

detail::Interval enclose(const CycloNum& x, const std::vector<detail::Interval>& cosines, long precision) {
  detail::Interval sum(precision);
  const auto& c = x.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) sum.add_scaled(cosines[k], c[k]);
  return sum;
}

}  // namespace

RealEmbedding::RealEmbedding(RootSelector root, long start_precision)
    : root_(root), start_precision_(start_precision) {
  auto cos = std::make_shared<Cosines>();
  cos->values = cosine_table(root_, start_precision_);
  cosines_ = std::move(cos);
}

int RealEmbedding::sign(const CycloNum& x) const {
  if (x.p() != root_.p()) throw Error(ErrorKind::invalid_argument, "embedding and element use different levels");
  if (x.is_zero()) return 0;
  if (!x.is_real()) throw Error(ErrorKind::not_real, x.to_string());
  for (long prec = start_precision_; prec <= kMaxPrecision; prec *= 2) {
    const auto table = prec == start_precision_ ? cosines_->values : cosine_table(root_, prec);
    const detail::Interval value = enclose(x, table, prec);
    if (value.positive()) return 1;
    if (value.negative()) return -1;
  }
  throw Error(ErrorKind::precision_exhausted, x.to_string());
}

double RealEmbedding::approximate(const CycloNum& x) const {
  return enclose(x, cosines_->values, start_precision_).midpoint();
}

int sign_under_embedding(const CycloNum& x, const RootSelector& root, long start_precision) {
  return RealEmbedding(root, start_precision).sign(x);
}

}  // namespace skein
