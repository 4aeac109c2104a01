#include "homtwist/uq_sl2.hpp"

#include <random>

#include "homtwist/error.hpp"

namespace homtwist {

void UqParams::validate() const {
  if (q.is_zero() || q == Rational(1) || q == Rational(-1))
    raise(ErrorKind::DegenerateQ, "q must avoid 0, 1 and -1, got " + q.str());
  if (lambda.is_zero()) raise(ErrorKind::ParamConstraintViolation, "lambda != 0");
  if (xi.is_zero()) raise(ErrorKind::ParamConstraintViolation, "xi != 0");
  if (l < 0) raise(ErrorKind::ParamConstraintViolation, "l >= 0");
}

namespace {

void require_q(const Rational& q) {
  if (q.is_zero() || q == Rational(1) || q == Rational(-1))
    raise(ErrorKind::DegenerateQ, "q must avoid 0, 1 and -1, got " + q.str());
}

std::string coeff_prefix(const Rational& c, bool first) {
  if (c == Rational(1)) return first ? "" : " + ";
  if (c == Rational(-1)) return first ? "-" : " - ";
  if (c.sign() < 0) return (first ? "-" : " - ") + (-c).str() + "·";
  return (first ? "" : " + ") + c.str() + "·";
}

std::string power(const char* base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return std::string(base) + "^" + std::to_string(e);
}

std::string plane_monomial(int m, int n) {
  const std::string s = power("x", m) + power("y", n);
  return s.empty() ? "1" : s;
}

}  // namespace

Rational q_int(long n, const Rational& q) {
  require_q(q);
  return (q.pow(n) - q.pow(-n)) / (q - q.inverse());
}

std::string to_string(const PBWMonomial& m) {
  const std::string s = power("F", m.a) + power("E", m.b) + power("K", m.c);
  return s.empty() ? "1" : s;
}

UqElement UqElement::unit() { return monomial({}); }

UqElement UqElement::monomial(PBWMonomial m, Rational c) {
  UqElement u;
  u.add(m, c);
  return u;
}

void UqElement::add(const PBWMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

UqElement& UqElement::operator+=(const UqElement& o) {
  for (const auto& [m, c] : o.terms) add(m, c);
  return *this;
}

UqElement operator*(const Rational& s, UqElement u) {
  if (s.is_zero()) return {};
  for (auto& [m, c] : u.terms) c *= s;
  return u;
}

std::string to_string(const UqElement& u) {
  if (u.terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : u.terms) {
    out += coeff_prefix(c, out.empty()) + to_string(m);
  }
  return out;
}

void UqTensor::add(const PBWMonomial& x, const PBWMonomial& y, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace({x, y}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string to_string(const UqTensor& t) {
  if (t.terms.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : t.terms) out += coeff_prefix(c, out.empty()) + to_string(k.first) + "⊗" + to_string(k.second);
  return out;
}

std::string to_string(Gen g) {
  switch (g) {
    case Gen::E: return "E";
    case Gen::F: return "F";
    case Gen::K: return "K";
    case Gen::Kinv: return "K^-1";
  }
  return "?";
}

Word word_of(const PBWMonomial& m) {
  Word w(m.a, Gen::F);
  w.insert(w.end(), m.b, Gen::E);
  w.insert(w.end(), std::abs(m.c), m.c > 0 ? Gen::K : Gen::Kinv);
  return w;
}

namespace {

struct Rewrite {
  std::vector<std::pair<Word, Rational>> replacements;
};

// Replacement of the pair (x, y), or nothing if the pair is not a redex.
bool rewrite_pair(Gen x, Gen y, const Rational& q, const Rational& inv_diff, Rewrite& out) {
  const Rational q2 = q * q, qm2 = q2.inverse();
  if (x == Gen::E && y == Gen::F) {
    out.replacements = {{{Gen::F, Gen::E}, 1}, {{Gen::K}, inv_diff}, {{Gen::Kinv}, -inv_diff}};
  } else if (x == Gen::K && y == Gen::E) {
    out.replacements = {{{Gen::E, Gen::K}, q2}};
  } else if (x == Gen::K && y == Gen::F) {
    out.replacements = {{{Gen::F, Gen::K}, qm2}};
  } else if (x == Gen::Kinv && y == Gen::E) {
    out.replacements = {{{Gen::E, Gen::Kinv}, qm2}};
  } else if (x == Gen::Kinv && y == Gen::F) {
    out.replacements = {{{Gen::F, Gen::Kinv}, q2}};
  } else if ((x == Gen::K && y == Gen::Kinv) || (x == Gen::Kinv && y == Gen::K)) {
    out.replacements = {{{}, 1}};
  } else {
    return false;
  }
  return true;
}

PBWMonomial monomial_of_normal_word(const Word& w) {
  PBWMonomial m;
  for (Gen g : w) {
    if (g == Gen::F) ++m.a;
    else if (g == Gen::E) ++m.b;
    else m.c += g == Gen::K ? 1 : -1;
  }
  return m;
}

}  // namespace

UqElement pbw_normalize(const Word& word, const Rational& q, RewriteStrategy strategy) {
  require_q(q);
  const Rational inv_diff = (q - q.inverse()).inverse();
  std::map<Word, Rational> pending{{word, 1}};
  UqElement out;
  Rewrite rw;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Rational c = node.mapped();
    std::ptrdiff_t pos = -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (rewrite_pair(w[i], w[i + 1], q, inv_diff, rw)) {
        pos = std::ptrdiff_t(i);
        if (strategy == RewriteStrategy::Leftmost) break;
      }
    }
    if (pos < 0) {
      out.add(monomial_of_normal_word(w), c);
      continue;
    }
    rewrite_pair(w[pos], w[pos + 1], q, inv_diff, rw);
    for (const auto& [mid, k] : rw.replacements) {
      Word next(w.begin(), w.begin() + pos);
      next.insert(next.end(), mid.begin(), mid.end());
      next.insert(next.end(), w.begin() + pos + 2, w.end());
      auto [it, inserted] = pending.try_emplace(std::move(next), c * k);
      if (!inserted) {
        it->second += c * k;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return out;
}

UqAlgebra::UqAlgebra(Rational q) : q_(std::move(q)) {
  require_q(q_);
  inv_diff_ = (q_ - q_.inverse()).inverse();
}

UqElement UqAlgebra::times(Gen g, const PBWMonomial& m) const {
  switch (g) {
    case Gen::F: return UqElement::monomial({m.a + 1, m.b, m.c});
    case Gen::K: return UqElement::monomial({m.a, m.b, m.c + 1}, q_.pow(2L * (m.b - m.a)));
    case Gen::Kinv: return UqElement::monomial({m.a, m.b, m.c - 1}, q_.pow(2L * (m.a - m.b)));
    case Gen::E: break;
  }
  if (m.a == 0) return UqElement::monomial({0, m.b + 1, m.c});
  if (auto it = gen_cache_.find({g, m}); it != gen_cache_.end()) return it->second;
  // E F^a = F (E F^{a-1}) + (K - K⁻¹)/(q - q⁻¹) F^{a-1}
  const PBWMonomial rest{m.a - 1, m.b, m.c};
  UqElement out;
  for (const auto& [x, c] : times(Gen::E, rest).terms) out.add({x.a + 1, x.b, x.c}, c);
  out += inv_diff_ * times(Gen::K, rest);
  out += (-inv_diff_) * times(Gen::Kinv, rest);
  gen_cache_.emplace(std::pair{g, m}, out);
  return out;
}

UqElement UqAlgebra::mul(const PBWMonomial& x, const PBWMonomial& y) const {
  if (auto it = mono_cache_.find({x, y}); it != mono_cache_.end()) return it->second;
  UqElement acc = UqElement::monomial(y);
  const Word w = word_of(x);
  for (auto g = w.rbegin(); g != w.rend(); ++g) {
    UqElement next;
    for (const auto& [m, c] : acc.terms) next += c * times(*g, m);
    acc = std::move(next);
  }
  mono_cache_.emplace(std::pair{x, y}, acc);
  return acc;
}

UqElement UqAlgebra::mul(const UqElement& u, const UqElement& v) const {
  UqElement out;
  for (const auto& [x, a] : u.terms)
    for (const auto& [y, b] : v.terms) out += (a * b) * mul(x, y);
  return out;
}

UqElement UqAlgebra::normalize(const Word& word) const {
  UqElement acc = UqElement::unit();
  for (auto g = word.rbegin(); g != word.rend(); ++g) {
    UqElement next;
    for (const auto& [m, c] : acc.terms) next += c * times(*g, m);
    acc = std::move(next);
  }
  return acc;
}

UqTensor UqAlgebra::tensor_mul(const UqTensor& x, const UqTensor& y) const {
  UqTensor out;
  for (const auto& [k1, c1] : x.terms)
    for (const auto& [k2, c2] : y.terms) {
      const UqElement left = mul(k1.first, k2.first), right = mul(k1.second, k2.second);
      for (const auto& [l, a] : left.terms)
        for (const auto& [r, b] : right.terms) out.add(l, r, c1 * c2 * a * b);
    }
  return out;
}

UqTensor UqAlgebra::coproduct(const PBWMonomial& m) const {
  const PBWMonomial one{}, E{0, 1, 0}, F{1, 0, 0}, K{0, 0, 1}, Ki{0, 0, -1};
  UqTensor dE, dF, dK;
  dE.add(one, E, 1);
  dE.add(E, K, 1);
  dF.add(Ki, F, 1);
  dF.add(F, one, 1);
  if (m.c >= 0)
    dK.add(K, K, 1);
  else
    dK.add(Ki, Ki, 1);
  UqTensor acc;
  acc.add(one, one, 1);
  for (int i = 0; i < m.a; ++i) acc = tensor_mul(acc, dF);
  for (int i = 0; i < m.b; ++i) acc = tensor_mul(acc, dE);
  for (int i = 0; i < std::abs(m.c); ++i) acc = tensor_mul(acc, dK);
  return acc;
}

UqTensor UqAlgebra::coproduct(const UqElement& u) const {
  UqTensor out;
  for (const auto& [m, c] : u.terms)
    for (const auto& [k, x] : coproduct(m).terms) out.add(k.first, k.second, c * x);
  return out;
}

UqElement uq_mul(const UqElement& u, const UqElement& v, const Rational& q) { return UqAlgebra(q).mul(u, v); }

UqTensor uq_coproduct(const UqElement& u, const Rational& q) { return UqAlgebra(q).coproduct(u); }

UqElement uq_alpha(const UqElement& u, int k, const Rational& lambda) {
  UqElement out;
  for (const auto& [m, c] : u.terms) out.add(m, c * lambda.pow(long(k) * (m.b - m.a)));
  return out;
}

UqTensor uq_alpha(const UqTensor& t, int k, const Rational& lambda) {
  UqTensor out;
  for (const auto& [p, c] : t.terms)
    out.add(p.first, p.second,
            c * lambda.pow(long(k) * (p.first.b - p.first.a)) * lambda.pow(long(k) * (p.second.b - p.second.a)));
  return out;
}

QPlaneElement QPlaneElement::monomial(int m, int n, Rational c) {
  QPlaneElement p;
  p.add(m, n, c);
  return p;
}

void QPlaneElement::add(int m, int n, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace({m, n}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

QPlaneElement& QPlaneElement::operator+=(const QPlaneElement& o) {
  for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
  return *this;
}

std::string to_string(const QPlaneElement& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : p.terms) out += coeff_prefix(c, out.empty()) + plane_monomial(k.first, k.second);
  return out;
}

QPlaneElement qp_mul(const QPlaneElement& p1, const QPlaneElement& p2, const Rational& q) {
  QPlaneElement out;
  for (const auto& [a, c1] : p1.terms)
    for (const auto& [b, c2] : p2.terms)
      out.add(a.first + b.first, a.second + b.second, c1 * c2 * q.pow(long(a.second) * b.first));
  return out;
}

QPlaneElement qp_beta(const QPlaneElement& p, int k, const UqParams& params) {
  QPlaneElement out;
  for (const auto& [mn, c] : p.terms) {
    const auto [m, n] = mn;
    out.add(m, n, c * params.xi.pow(long(k) * (m + n)) * params.lambda.pow(-long(k) * n));
  }
  return out;
}

QPlaneElement sigma_action(const UqElement& h, const QPlaneElement& p, const Rational& q) {
  QPlaneElement out;
  for (const auto& [mono, c] : h.terms) {
    QPlaneElement acc;
    for (const auto& [mn, x] : p.terms) acc.add(mn.first, mn.second, c * x);
    const Word w = word_of(mono);
    for (auto g = w.rbegin(); g != w.rend(); ++g) {
      QPlaneElement next;
      for (const auto& [mn, x] : acc.terms) {
        const auto [m, n] = mn;
        switch (*g) {
          case Gen::K: next.add(m, n, x * q.pow(long(m) - n)); break;
          case Gen::Kinv: next.add(m, n, x * q.pow(long(n) - m)); break;
          case Gen::E:
            if (n > 0) next.add(m + 1, n - 1, x * q_int(n, q));
            break;
          case Gen::F:
            if (m > 0) next.add(m - 1, n + 1, x * q_int(m, q));
            break;
        }
      }
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

QPlaneElement rho_l(const UqElement& h, const QPlaneElement& p, const UqParams& params) {
  params.validate();
  return sigma_action(uq_alpha(h, params.l + 1, params.lambda), qp_beta(p, 1, params), params.q);
}

namespace {

std::vector<std::pair<int, int>> plane_monomials(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int d = 0; d <= bound; ++d)
    for (int m = d; m >= 0; --m) out.emplace_back(m, d - m);
  return out;
}

std::vector<UqElement> generators() {
  return {UqElement::monomial({0, 1, 0}), UqElement::monomial({1, 0, 0}), UqElement::monomial({0, 0, 1}),
          UqElement::monomial({0, 0, -1})};
}

void record(CheckReport& r, const std::string& id, std::vector<std::size_t> tuple, const std::string& lhs,
            const std::string& rhs) {
  Failure f;
  f.equation = id;
  f.tuple = std::move(tuple);
  f.detail = "lhs " + lhs + " rhs " + rhs;
  r.add_failure(std::move(f));
}

}  // namespace

CheckReport check_uq_module_hom_algebra(const UqParams& params, int bound) {
  return check_uq_module_hom_algebra(params, bound,
                                     [&](const UqElement& h, const QPlaneElement& p) { return rho_l(h, p, params); });
}

CheckReport check_uq_module_hom_algebra(const UqParams& params, int bound, const UqAction& act) {
  params.validate();
  const UqAlgebra U(params.q);
  const auto gens = generators();
  const auto monos = plane_monomials(bound);
  const auto beta = [&](const QPlaneElement& p) { return qp_beta(p, 1, params); };
  const auto alpha = [&](const UqElement& h, int k) { return uq_alpha(h, k, params.lambda); };
  const auto mu_beta = [&](const QPlaneElement& a, const QPlaneElement& b) { return beta(qp_mul(a, b, params.q)); };

  CheckReport r;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const QPlaneElement p = QPlaneElement::monomial(monos[j].first, monos[j].second);
      const QPlaneElement lhs = beta(act(gens[i], p)), rhs = act(alpha(gens[i], 1), beta(p));
      if (!(lhs == rhs)) record(r, "uq_module1", {i, j}, to_string(lhs), to_string(rhs));
    }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (std::size_t j = 0; j < monos.size(); ++j) {
        const QPlaneElement p = QPlaneElement::monomial(monos[j].first, monos[j].second);
        const QPlaneElement lhs = act(alpha(gens[i], 1), act(gens[k], p));
        const QPlaneElement rhs = act(alpha(U.mul(gens[i], gens[k]), 1), beta(p));
        if (!(lhs == rhs)) record(r, "uq_module2", {i, k, j}, to_string(lhs), to_string(rhs));
      }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const UqTensor split = U.coproduct(alpha(gens[i], 1));
    for (std::size_t j = 0; j < monos.size(); ++j)
      for (std::size_t k = 0; k < monos.size(); ++k) {
        const QPlaneElement p = QPlaneElement::monomial(monos[j].first, monos[j].second);
        const QPlaneElement p2 = QPlaneElement::monomial(monos[k].first, monos[k].second);
        const QPlaneElement lhs = act(alpha(gens[i], 2), mu_beta(p, p2));
        QPlaneElement rhs;
        for (const auto& [pair, c] : split.terms) {
          QPlaneElement term = mu_beta(act(UqElement::monomial(pair.first, c), p), act(UqElement::monomial(pair.second), p2));
          rhs += term;
        }
        if (!(lhs == rhs)) record(r, "uq_module_algebra", {i, j, k}, to_string(lhs), to_string(rhs));
      }
  }
  return r;
}

SmashTerm SmashTerm::basis(int m, int n, const PBWMonomial& h, Rational c) {
  SmashTerm t;
  t.add(m, n, h, c);
  return t;
}

void SmashTerm::add(int m, int n, const PBWMonomial& h, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace({{m, n}, h}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string to_string(const SmashTerm& t) {
  if (t.terms.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : t.terms)
    out += coeff_prefix(c, out.empty()) + "(" + plane_monomial(k.first.first, k.first.second) + "#" +
           to_string(k.second) + ")";
  return out;
}

SmashTerm smash_mul_uq(const SmashTerm& t1, const SmashTerm& t2, const UqParams& params) {
  params.validate();
  const UqAlgebra U(params.q);
  SmashTerm out;
  for (const auto& [k1, c1] : t1.terms) {
    const QPlaneElement p = QPlaneElement::monomial(k1.first.first, k1.first.second);
    const UqTensor split = U.coproduct(uq_alpha(UqElement::monomial(k1.second), 1, params.lambda));
    for (const auto& [k2, c2] : t2.terms) {
      const QPlaneElement p2 = qp_beta(QPlaneElement::monomial(k2.first.first, k2.first.second), -1, params);
      const UqElement h2 = UqElement::monomial(k2.second);
      for (const auto& [pair, c] : split.terms) {
        const QPlaneElement acted = rho_l(uq_alpha(UqElement::monomial(pair.first), -2, params.lambda), p2, params);
        const QPlaneElement left = qp_beta(qp_mul(p, acted, params.q), 1, params);
        const UqElement right =
            uq_alpha(U.mul(uq_alpha(UqElement::monomial(pair.second), -1, params.lambda), h2), 1, params.lambda);
        for (const auto& [mn, a] : left.terms)
          for (const auto& [h, b] : right.terms) out.add(mn.first, mn.second, h, c1 * c2 * c * a * b);
      }
    }
  }
  return out;
}

std::string to_string(ClosedRow row) {
  switch (row) {
    case ClosedRow::K: return "K";
    case ClosedRow::Kinv: return "Kinv";
    case ClosedRow::E: return "E";
    case ClosedRow::F: return "F";
  }
  return "?";
}

namespace {

void add_product(SmashTerm& out, int m, int n, const Rational& c, const UqElement& h) {
  for (const auto& [mono, x] : h.terms) out.add(m, n, mono, c * x);
}

}  // namespace

SmashTerm example32_closed_form(ClosedRow row, int m, int n, int r, int s, const UqElement& G,
                                const UqParams& params) {
  const UqAlgebra U(params.q);
  const Rational& q = params.q;
  const UqElement aG = uq_alpha(G, 1, params.lambda);
  const Rational xiN = params.xi.pow(long(m) + n + r + s);
  const auto times = [&](PBWMonomial g) { return U.mul(UqElement::monomial(g), aG); };
  SmashTerm out;
  switch (row) {
    case ClosedRow::K:
    case ClosedRow::Kinv: {
      const int e = row == ClosedRow::K ? 1 : -1;
      const Rational c = q.pow(long(e) * r - long(e) * s + long(n) * r) * xiN * params.lambda.pow(-long(n) - s);
      add_product(out, m + r, n + s, c, times({0, 0, e}));
      break;
    }
    case ClosedRow::E: {
      const Rational lam = params.lambda.pow(-long(n) - s + 1);
      add_product(out, m + r, n + s, q.pow(long(n) * r) * xiN * lam, times({0, 1, 0}));
      if (s > 0)
        add_product(out, m + r + 1, n + s - 1, q_int(s, q) * q.pow(long(n) * (r + 1)) * xiN * lam, times({0, 0, 1}));
      break;
    }
    case ClosedRow::F: {
      const Rational lam = params.lambda.pow(-long(n) - s - 1);
      add_product(out, m + r, n + s, q.pow(long(s) - r + long(n) * r) * xiN * lam, times({1, 0, 0}));
      if (r > 0) add_product(out, m + r - 1, n + s + 1, q_int(r, q) * q.pow(long(n) * (r - 1)) * xiN * lam, aG);
      break;
    }
  }
  return out;
}

std::vector<std::pair<std::string, UqElement>> example32_G_list() {
  return {{"1", UqElement::unit()},
          {"E", UqElement::monomial({0, 1, 0})},
          {"F", UqElement::monomial({1, 0, 0})},
          {"K", UqElement::monomial({0, 0, 1})},
          {"K^-1", UqElement::monomial({0, 0, -1})},
          {"EK", UqElement::monomial({0, 1, 1})}};
}

CheckReport verify_example32(const UqParams& params, int bounds) {
  return verify_example32(params, bounds, example32_closed_form);
}

CheckReport verify_example32(const UqParams& params, int bounds, const ClosedForm& closed) {
  params.validate();
  if (params.l != 0) raise(ErrorKind::PreconditionFailure, "the closed formulas are stated for l = 0");
  const std::pair<ClosedRow, PBWMonomial> rows[] = {{ClosedRow::K, {0, 0, 1}},
                                                     {ClosedRow::Kinv, {0, 0, -1}},
                                                     {ClosedRow::E, {0, 1, 0}},
                                                     {ClosedRow::F, {1, 0, 0}}};
  const auto Gs = example32_G_list();
  CheckReport rep;
  for (const auto& [row, h] : rows)
    for (int m = 0; m <= bounds; ++m)
      for (int n = 0; n <= bounds; ++n)
        for (int r = 0; r <= bounds; ++r)
          for (int s = 0; s <= bounds; ++s)
            for (std::size_t g = 0; g < Gs.size(); ++g) {
              SmashTerm right;
              for (const auto& [mono, c] : Gs[g].second.terms) right.add(r, s, mono, c);
              const SmashTerm lhs = smash_mul_uq(SmashTerm::basis(m, n, h), right, params);
              const SmashTerm rhs = closed(row, m, n, r, s, Gs[g].second, params);
              if (!(lhs == rhs))
                record(rep, "row_" + to_string(row),
                       {std::size_t(m), std::size_t(n), std::size_t(r), std::size_t(s), g}, to_string(lhs),
                       to_string(rhs));
            }
  return rep;
}

std::vector<PBWMonomial> pbw_monomials(int degree) {
  std::vector<PBWMonomial> out;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int c = -(degree - a - b); c <= degree - a - b; ++c) out.push_back({a, b, c});
  return out;
}

CheckReport check_uq_confluence(const Rational& q, int max_len) {
  const UqAlgebra U(q);
  CheckReport r;
  for (int len = 0; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Word w;
      for (std::size_t d : digits) w.push_back(Gen(d));
      const UqElement left = pbw_normalize(w, q, RewriteStrategy::Leftmost);
      const UqElement right = pbw_normalize(w, q, RewriteStrategy::Rightmost);
      const UqElement fast = U.normalize(w);
      if (!(left == right) || !(left == fast))
        record(r, "confluence", digits, to_string(left), to_string(right) + " | " + to_string(fast));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == 4) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return r;
}

CheckReport check_uq_associativity(const Rational& q, int max_exp) {
  const UqAlgebra U(q);
  std::vector<PBWMonomial> monos;
  for (int a = 0; a <= max_exp; ++a)
    for (int b = 0; b <= max_exp; ++b)
      for (int c = -max_exp; c <= max_exp; ++c) monos.push_back({a, b, c});
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  CheckReport r;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    const UqElement x = UqElement::monomial(monos[i]), y = UqElement::monomial(monos[j]),
                    z = UqElement::monomial(monos[k]);
    const UqElement lhs = U.mul(U.mul(x, y), z), rhs = U.mul(x, U.mul(y, z));
    if (!(lhs == rhs)) record(r, "associativity", {i, j, k}, to_string(lhs), to_string(rhs));
  }
  return r;
}

CheckReport check_uq_coproduct_multiplicative(const Rational& q, int max_degree) {
  const UqAlgebra U(q);
  const auto monos = pbw_monomials(max_degree);
  CheckReport r;
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const UqTensor lhs = U.coproduct(U.mul(monos[i], monos[j]));
      const UqTensor rhs = U.tensor_mul(U.coproduct(monos[i]), U.coproduct(monos[j]));
      if (!(lhs == rhs)) record(r, "coproduct_multiplicative", {i, j}, to_string(lhs), to_string(rhs));
    }
  return r;
}

CheckReport check_uq_alpha_bialgebra(const UqParams& params, int max_degree) {
  params.validate();
  const UqAlgebra U(params.q);
  const auto monos = pbw_monomials(max_degree);
  const auto alpha = [&](const UqElement& u) { return uq_alpha(u, 1, params.lambda); };
  CheckReport r;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const UqElement u = UqElement::monomial(monos[i]);
    const UqTensor lhs = U.coproduct(alpha(u)), rhs = uq_alpha(U.coproduct(u), 1, params.lambda);
    if (!(lhs == rhs)) record(r, "alpha_comultiplicative", {i}, to_string(lhs), to_string(rhs));
  }
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const UqElement u = UqElement::monomial(monos[i]), v = UqElement::monomial(monos[j]);
      const UqElement lhs = alpha(U.mul(u, v)), rhs = U.mul(alpha(u), alpha(v));
      if (!(lhs == rhs)) record(r, "alpha_multiplicative", {i, j}, to_string(lhs), to_string(rhs));
    }
  return r;
}

}  // namespace homtwist
