#include "splitgraph/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace splitgraph {

Monomial::Monomial(const std::string& var, unsigned exp) {
  if (var.empty()) throw Error("empty variable name");
  if (exp > 0) f_.emplace_back(var, exp);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return natural_less(a.first, b.first); });
  Monomial m;
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == f.first)
      m.f_.back().second += f.second;
    else
      m.f_.push_back(std::move(f));
  }
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : f_) d += f.second;
  return d;
}

unsigned Monomial::degree_in(const std::string& var) const {
  for (const auto& f : f_)
    if (f.first == var) return f.second;
  return 0;
}

Monomial Monomial::without(const std::string& var) const {
  Monomial m;
  for (const auto& f : f_)
    if (f.first != var) m.f_.push_back(f);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  std::size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j == o.f_.size() || (i < f_.size() && natural_less(f_[i].first, o.f_[j].first))) {
      m.f_.push_back(f_[i++]);
    } else if (i == f_.size() || natural_less(o.f_[j].first, f_[i].first)) {
      m.f_.push_back(o.f_[j++]);
    } else {
      m.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i;
      ++j;
    }
  }
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& f : f_)
    if (o.degree_in(f.first) < f.second) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw Error("monomial does not divide");
  Monomial m;
  for (const auto& f : f_) {
    unsigned e = f.second - o.degree_in(f.first);
    if (e > 0) m.f_.emplace_back(f.first, e);
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (const auto& f : a.f_) {
    unsigned e = std::min(f.second, b.degree_in(f.first));
    if (e > 0) m.f_.emplace_back(f.first, e);
  }
  return m;
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : f_) {
    if (!out.empty()) out += '*';
    out += v;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

bool TermOrderDesc::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
      ++i;
      ++j;
    } else {
      return natural_less(fa[i].first, fb[j].first);
    }
  }
  return i < fa.size() && j == fb.size();
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Monomial(), Integer(c));
}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial::Polynomial(const Monomial& m, const Integer& c) {
  if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::var(const std::string& name) { return Polynomial(Monomial(name)); }

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Integer Polynomial::constant_value() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Integer(0) : it->second;
}

std::pair<Monomial, Integer> Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return *terms_.begin();
}

std::vector<std::string> Polynomial::variables() const {
  std::set<std::string, NaturalLess> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vs.insert(f.first);
  return {vs.begin(), vs.end()};
}

unsigned Polynomial::degree_in(const std::string& v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_linear_in_every_variable() const {
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors())
      if (f.second > 1) return false;
  return true;
}

std::vector<Polynomial> Polynomial::coefficients_in(const std::string& v) const {
  std::vector<Polynomial> out(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) out[m.degree_in(v)].add_term(m.without(v), c);
  return out;
}

Integer Polynomial::evaluate(const std::map<std::string, Integer>& assignment) const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw Error("no value for variable '" + v + "'");
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), e);
      t *= p;
    }
    total += t;
  }
  return total;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const Integer& k) const {
  Polynomial r;
  if (k == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * k);
  return r;
}

Polynomial Polynomial::operator*(const Monomial& mono) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    if (first)
      out += neg ? "- " : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    Integer a = abs(c);
    if (m.is_one())
      out += a.get_str();
    else if (a == 1)
      out += m.to_string();
    else
      out += a.get_str() + "*" + m.to_string();
  }
  return out;
}

namespace {

bool name_char(char ch) {
  return !std::isspace(static_cast<unsigned char>(ch)) && ch != '*' && ch != '^' && ch != '+' && ch != '-';
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> Error {
    return Error("polynomial parse error at offset " + std::to_string(i) + ": " + why);
  };
  auto read_uint = [&]() -> std::string {
    std::size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return text.substr(s, i - s);
  };

  Polynomial result;
  skip();
  if (i == text.size()) throw fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Integer coef = sign;
    std::vector<Monomial::Factor> factors;
    while (true) {
      skip();
      if (i == text.size()) throw fail("missing factor");
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        coef *= Integer(read_uint());
      } else if (name_char(text[i])) {
        std::size_t s = i;
        while (i < text.size() && name_char(text[i])) ++i;
        std::string name = text.substr(s, i - s);
        unsigned e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          std::string digits = read_uint();
          if (digits.empty()) throw fail("missing exponent");
          e = static_cast<unsigned>(std::stoul(digits));
        }
        factors.emplace_back(name, e);
      } else {
        throw fail(std::string("unexpected '") + text[i] + "'");
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    result.add_term(Monomial::from_factors(std::move(factors)), coef);
  }
  return result;
}

Slices coefficient_slices(const Polynomial& p, const std::string& v) {
  std::vector<Polynomial> cs = p.coefficients_in(v);
  if (cs.size() > 3) throw Error("not quadratic in '" + v + "'");
  cs.resize(3);
  return Slices{cs[2], cs[1], cs[0]};
}

std::pair<Monomial, Polynomial> monomial_content(const Polynomial& p) {
  if (p.is_zero()) throw Error("monomial content of the zero polynomial");
  auto it = p.terms().begin();
  Monomial g = it->first;
  for (++it; it != p.terms().end(); ++it) g = Monomial::gcd(g, it->first);
  Polynomial q;
  for (const auto& [m, c] : p.terms()) q += Polynomial(m / g, c);
  return {g, q};
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw Error("division by zero polynomial");
  auto [dm, dc] = d.leading_term();
  Polynomial q;
  Polynomial rem = p;
  while (!rem.is_zero()) {
    auto [m, c] = rem.leading_term();
    if (!dm.divides(m) || !mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
    Integer tc = c / dc;
    Monomial tm = m / dm;
    Polynomial t(tm, tc);
    q += t;
    rem -= d * t;
  }
  return q;
}

Polynomial normalize_sign(const Polynomial& p) {
  if (p.is_zero() || p.leading_term().second > 0) return p;
  return -p;
}

namespace {

std::optional<Polynomial> sqrt_rec(const Polynomial& p) {
  if (p.is_zero()) return Polynomial();
  if (p.is_constant()) {
    Integer c = p.constant_value();
    if (c < 0 || !mpz_perfect_square_p(c.get_mpz_t())) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), c.get_mpz_t());
    return Polynomial(r);
  }
  std::string x = p.variables().front();
  std::vector<Polynomial> cs = p.coefficients_in(x);
  std::size_t d = cs.size() - 1;
  if (d % 2 != 0) return std::nullopt;
  std::size_t m = d / 2;
  std::vector<Polynomial> r(m + 1);
  auto top = sqrt_rec(cs[d]);
  if (!top) return std::nullopt;
  r[m] = normalize_sign(*top);
  Polynomial twice_top = r[m] * Integer(2);
  for (std::size_t jj = m; jj-- > 0;) {
    Polynomial t = cs[m + jj];
    for (std::size_t a = jj + 1; a < m; ++a) t -= r[a] * r[m + jj - a];
    auto q = exact_divide(t, twice_top);
    if (!q) return std::nullopt;
    r[jj] = std::move(*q);
  }
  Polynomial root;
  for (std::size_t j = 0; j <= m; ++j) root += r[j] * Monomial(x, static_cast<unsigned>(j));
  if (root * root != p) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Polynomial> perfect_square_root(const Polynomial& p) {
  auto r = sqrt_rec(p);
  if (!r) return std::nullopt;
  return normalize_sign(*r);
}

}  // namespace splitgraph
