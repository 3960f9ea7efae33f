#include "cherednik/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

// Exact division of integer polynomials (lowest degree first); divisor monic.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {0};
  std::vector<long> quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const long lead = num[k];
    if (lead == 0) continue;
    quot[k - dd] = lead;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= lead * den[i];
  }
  return quot;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(unsigned ell) {
  if (ell == 0) throw ValidationError("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<long>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(ell); it != cache.end()) return it->second;
  }
  std::vector<long> poly(ell + 1, 0);
  poly[0] = -1;
  poly[ell] = 1;
  for (unsigned d = 1; d < ell; ++d) {
    if (ell % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(ell, poly);
  return poly;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned ell) {
  ell = canonical_field(ell);
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(ell); it != cache.end()) return it->second;
  }
  auto field = std::make_shared<CyclotomicField>();
  field->ell = ell;
  field->phi = ell == 1 ? std::vector<long>{-1, 1} : cyclotomic_polynomial(ell);
  field->degree = static_cast<unsigned>(field->phi.size() - 1);
  const unsigned deg = field->degree;
  field->reduction.assign(2 * deg - 1, std::vector<mpq_class>(deg));
  for (unsigned k = 0; k < 2 * deg - 1; ++k) {
    if (k < deg) {
      field->reduction[k][k] = 1;
      continue;
    }
    // zeta^k = zeta * zeta^(k-1); shift and fold the top coefficient.
    const auto& prev = field->reduction[k - 1];
    auto& cur = field->reduction[k];
    const mpq_class top = prev[deg - 1];
    for (unsigned i = deg - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < deg; ++i) cur[i] -= top * field->phi[i];
  }
  std::lock_guard lock(mutex);
  cache.emplace(ell, field);
  return field;
}

Scalar::Scalar(unsigned ell, std::vector<mpq_class> coords) : ell_(ell), coords_(std::move(coords)) {
  canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::zeta(unsigned ell, long power) {
  if (ell == 0) throw ValidationError("cyclotomic index must be positive");
  if (ell == 1) return Scalar(1);
  if (ell == 2) return Scalar(power % 2 == 0 ? 1 : -1);
  const long order = static_cast<long>(ell);
  const long k = ((power % order) + order) % order;
  auto field = CyclotomicField::get(ell);
  if (k < static_cast<long>(field->reduction.size())) return Scalar(ell, field->reduction[k]);
  return Scalar(ell, field->reduction[1]).pow(k);
}

Scalar Scalar::from_coords(unsigned ell, std::vector<mpq_class> coords) {
  ell = canonical_field(ell);
  auto field = CyclotomicField::get(ell);
  if (coords.size() > field->degree) {
    // Fold higher powers through the reduction table.
    std::vector<mpq_class> folded(field->degree);
    Scalar acc(ell, folded);
    Scalar z = zeta(ell, 1);
    Scalar power(1);
    for (const auto& c : coords) {
      acc += Scalar(c) * power;
      power *= z;
    }
    return acc;
  }
  coords.resize(field->degree);
  return Scalar(ell, std::move(coords));
}

void Scalar::canonicalize() {
  ell_ = canonical_field(ell_);
  for (auto& c : coords_) c.canonicalize();
  if (ell_ != 1) {
    bool rational = true;
    for (std::size_t i = 1; i < coords_.size(); ++i) {
      if (coords_[i] != 0) {
        rational = false;
        break;
      }
    }
    if (rational) {
      coords_.resize(1);
      ell_ = 1;
    }
  }
  if (coords_.empty()) coords_.resize(1);
}

bool Scalar::is_zero() const { return ell_ == 1 && coords_[0] == 0; }
bool Scalar::is_one() const { return ell_ == 1 && coords_[0] == 1; }

const mpq_class& Scalar::to_rational() const {
  if (ell_ != 1) throw FieldMismatch("value " + str() + " is not rational");
  return coords_[0];
}

bool Scalar::is_integer() const { return ell_ == 1 && coords_[0].get_den() == 1; }

bool Scalar::is_algebraic_integer() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

unsigned Scalar::common_field(const Scalar& a, const Scalar& b) {
  if (a.ell_ == b.ell_) return a.ell_;
  if (a.ell_ == 1) return b.ell_;
  if (b.ell_ == 1) return a.ell_;
  throw FieldMismatch("Q(zeta_" + std::to_string(a.ell_) + ") vs Q(zeta_" + std::to_string(b.ell_) + ")");
}

void Scalar::promote_to(unsigned ell) {
  if (ell_ == ell) return;
  coords_.resize(CyclotomicField::get(ell)->degree);
  ell_ = ell;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  const unsigned ell = common_field(*this, other);
  promote_to(ell);
  for (std::size_t i = 0; i < other.coords_.size(); ++i) coords_[i] += other.coords_[i];
  if (ell != 1) canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  const unsigned ell = common_field(*this, other);
  promote_to(ell);
  for (std::size_t i = 0; i < other.coords_.size(); ++i) coords_[i] -= other.coords_[i];
  if (ell != 1) canonicalize();
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.ell_ == 1 && b.ell_ == 1) return Scalar(mpq_class(a.coords_[0] * b.coords_[0]));
  if (a.ell_ == 1 || b.ell_ == 1) {
    const Scalar& r = a.ell_ == 1 ? a : b;
    const Scalar& c = a.ell_ == 1 ? b : a;
    if (r.coords_[0] == 0) return Scalar();
    std::vector<mpq_class> coords = c.coords_;
    for (auto& x : coords) x *= r.coords_[0];
    return Scalar(c.ell_, std::move(coords));
  }
  const unsigned ell = Scalar::common_field(a, b);
  auto field = CyclotomicField::get(ell);
  const unsigned deg = field->degree;
  std::vector<mpq_class> conv(2 * deg - 1);
  for (unsigned i = 0; i < deg; ++i) {
    if (a.coords_[i] == 0) continue;
    for (unsigned j = 0; j < deg; ++j) {
      if (b.coords_[j] == 0) continue;
      conv[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  std::vector<mpq_class> out(deg);
  for (unsigned k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    if (k < deg) {
      out[k] += conv[k];
      continue;
    }
    for (unsigned i = 0; i < deg; ++i) {
      if (field->reduction[k][i] != 0) out[i] += conv[k] * field->reduction[k][i];
    }
  }
  return Scalar(ell, std::move(out));
}

Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

Scalar& Scalar::operator/=(const Scalar& other) { return *this = *this * other.inv(); }

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (ell_ == 1) return Scalar(mpq_class(1 / coords_[0]));
  // Solve (multiplication-by-this) * y = e_0 over Q.
  auto field = CyclotomicField::get(ell_);
  const unsigned deg = field->degree;
  std::vector<std::vector<mpq_class>> m(deg, std::vector<mpq_class>(deg + 1));
  for (unsigned col = 0; col < deg; ++col) {
    std::vector<mpq_class> e(deg);
    e[col] = 1;
    Scalar image = *this * Scalar::from_coords(ell_, e);
    image.promote_to(ell_);
    for (unsigned row = 0; row < deg; ++row) m[row][col] = image.coords_[row];
  }
  m[0][deg] = 1;
  for (unsigned col = 0; col < deg; ++col) {
    unsigned pivot = col;
    while (pivot < deg && m[pivot][col] == 0) ++pivot;
    if (pivot == deg) throw DivisionByZero("singular multiplication map");
    std::swap(m[pivot], m[col]);
    const mpq_class lead = m[col][col];
    for (auto& x : m[col]) x /= lead;
    for (unsigned row = 0; row < deg; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const mpq_class f = m[row][col];
      for (unsigned k = col; k <= deg; ++k) m[row][k] -= f * m[col][k];
    }
  }
  std::vector<mpq_class> y(deg);
  for (unsigned i = 0; i < deg; ++i) y[i] = m[i][deg];
  return Scalar(ell_, std::move(y));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& other) const {
  return ell_ == other.ell_ && coords_ == other.coords_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& other) const {
  if (ell_ != other.ell_) return ell_ <=> other.ell_;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const int c = cmp(coords_[i], other.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Scalar::bit_size() const {
  std::size_t bits = 0;
  for (const auto& c : coords_) {
    bits = std::max(bits, mpz_sizeinbase(c.get_num_mpz_t(), 2));
    bits = std::max(bits, mpz_sizeinbase(c.get_den_mpz_t(), 2));
  }
  return bits;
}

std::string Scalar::str() const {
  if (ell_ == 1) return coords_[0].get_str();
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const mpq_class& c = coords_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (c < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  out += ")";
  return out;
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, unsigned ell) : text_(text), ell_(canonical_field(ell)) {}

  Scalar parse() {
    skip_ws();
    Scalar value;
    if (peek() == '(') {
      ++pos_;
      value = sum();
      skip_ws();
      expect(')');
    } else {
      value = sum();
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("scalar '" + std::string(text_) + "': " + msg, 1, pos_ + 1);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar sum() {
    skip_ws();
    Scalar total;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      Scalar t = term();
      total += sign < 0 ? -t : t;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
    }
    return total;
  }

  Scalar term() {
    skip_ws();
    Scalar coeff(1);
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      coeff = Scalar(q);
      have_number = true;
      skip_ws();
      if (peek() != '*') return coeff;
      ++pos_;
      skip_ws();
    }
    if (peek() != 'z') {
      if (have_number) fail("expected 'z' after '*'");
      fail("expected a number or 'z'");
    }
    if (ell_ == 1) fail("'z' is not available over the rationals");
    ++pos_;
    long power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      power = integer().get_si();
    }
    return coeff * Scalar::zeta(ell_, power);
  }

  std::string_view text_;
  unsigned ell_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, unsigned ell) { return ScalarParser(text, ell).parse(); }

}  // namespace cherednik
