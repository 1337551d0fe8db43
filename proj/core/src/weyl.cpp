#include "capelli/weyl.hpp"

#include <cassert>
#include <sstream>

namespace capelli {

WeylElement WeylElement::from_coeff(const AlgebraSignature& sig, const RatFunc& c) {
  WeylElement e(sig);
  e.add_term(Monomial::unit(sig.M, sig.N), c);
  return e;
}

WeylElement WeylElement::x(const AlgebraSignature& sig, int i, int j) {
  assert(i >= 0 && i < sig.M && j >= 0 && j < sig.N);
  Monomial m = Monomial::unit(sig.M, sig.N);
  m.xe[static_cast<size_t>(i) * sig.N + j] = 1;
  return from_term(sig, m, RatFunc(Rat(1)));
}

WeylElement WeylElement::p(const AlgebraSignature& sig, int i, int j) {
  assert(i >= 0 && i < sig.M && j >= 0 && j < sig.N);
  Monomial m = Monomial::unit(sig.M, sig.N);
  m.pe[static_cast<size_t>(i) * sig.N + j] = 1;
  return from_term(sig, m, RatFunc(Rat(1)));
}

WeylElement WeylElement::p_u(const AlgebraSignature& sig) {
  Monomial m = Monomial::unit(sig.M, sig.N);
  m.pu = 1;
  return from_term(sig, m, RatFunc(Rat(1)));
}

WeylElement WeylElement::p_v(const AlgebraSignature& sig) {
  Monomial m = Monomial::unit(sig.M, sig.N);
  m.pv = 1;
  return from_term(sig, m, RatFunc(Rat(1)));
}

WeylElement WeylElement::from_term(const AlgebraSignature& sig, const Monomial& m,
                                   const RatFunc& c) {
  WeylElement e(sig);
  e.add_term(m, c);
  return e;
}

void WeylElement::add_term(const Monomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement WeylElement::operator-() const {
  WeylElement r(sig_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (!(sig_ == o.sig_)) throw SignatureMismatch();
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (!(sig_ == o.sig_)) throw SignatureMismatch();
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElement WeylElement::scaled(const RatFunc& c) const {
  WeylElement r(sig_);
  if (c.is_zero()) return r;
  for (const auto& [m, f] : terms_) r.add_term(m, f * c);
  return r;
}

namespace {

// Multiply one pair of normally ordered terms, accumulating into `out`.
void multiply_terms(const AlgebraSignature& sig, const Monomial& m1, const RatFunc& c1,
                    const Monomial& m2, const RatFunc& c2, MulPolicy policy, WeylElement& out) {
  const Rat& h = sig.h;
  const bool h_zero = h.is_zero();
  const int j1 = m1.pu, k1 = m1.pv;

  // Positions where the p-block of m1 meets the x-block of m2.
  std::vector<size_t> overlap;
  for (size_t idx = 0; idx < m1.pe.size(); ++idx)
    if (m1.pe[idx] > 0 && m2.xe[idx] > 0) overlap.push_back(idx);

  // Precompute u/v derivatives of c2 as needed: p_u^j1 p_v^k1 moving through c2.
  // d[r][s] = (d/du)^r (d/dv)^s c2.
  const int rmax = h_zero ? 0 : j1;
  const int smax = h_zero ? 0 : k1;
  std::vector<std::vector<RatFunc>> d(static_cast<size_t>(rmax) + 1);
  d[0].resize(static_cast<size_t>(smax) + 1);
  d[0][0] = c2;
  for (int s = 1; s <= smax; ++s) d[0][static_cast<size_t>(s)] = d[0][static_cast<size_t>(s - 1)].derivative(Var::V);
  for (int r = 1; r <= rmax; ++r) {
    d[static_cast<size_t>(r)].resize(static_cast<size_t>(smax) + 1);
    for (int s = 0; s <= smax; ++s)
      d[static_cast<size_t>(r)][static_cast<size_t>(s)] =
          s == 0 ? d[static_cast<size_t>(r - 1)][0].derivative(Var::U)
                 : d[static_cast<size_t>(r)][static_cast<size_t>(s - 1)].derivative(Var::V);
  }

  for (int r = 0; r <= rmax; ++r) {
    for (int s = 0; s <= smax; ++s) {
      const RatFunc& dc = d[static_cast<size_t>(r)][static_cast<size_t>(s)];
      if (dc.is_zero()) continue;
      Rat uv_factor = Rat::binomial(static_cast<unsigned long>(j1), static_cast<unsigned long>(r)) *
                      Rat::binomial(static_cast<unsigned long>(k1), static_cast<unsigned long>(s)) *
                      h.pow(static_cast<unsigned>(r + s));
      if (uv_factor.is_zero()) continue;
      const RatFunc coeff_base = c1 * dc * RatFunc(uv_factor);

      Monomial base = Monomial::unit(sig.M, sig.N);
      base.pu = j1 - r + m2.pu;
      base.pv = k1 - s + m2.pv;
      for (size_t idx = 0; idx < base.xe.size(); ++idx) {
        base.xe[idx] = m1.xe[idx] + m2.xe[idx];
        base.pe[idx] = m1.pe[idx] + m2.pe[idx];
      }

      // Odometer over the k-vector of the p^b x^a rewrites at overlap positions.
      std::vector<int> k(overlap.size(), 0);
      while (true) {
        Rat factor(1);
        Monomial mono = base;
        bool zero = false;
        for (size_t t = 0; t < overlap.size(); ++t) {
          const size_t idx = overlap[t];
          const int kk = k[t];
          if (kk > 0) {
            Rat hk = h.pow(static_cast<unsigned>(kk));
            if (policy == MulPolicy::flipped_px && (kk % 2) == 1) hk = -hk;
            factor *= Rat::binomial(static_cast<unsigned long>(m1.pe[idx]), static_cast<unsigned long>(kk)) *
                      Rat::binomial(static_cast<unsigned long>(m2.xe[idx]), static_cast<unsigned long>(kk)) *
                      Rat::factorial(static_cast<unsigned long>(kk)) * hk;
            if (factor.is_zero()) {
              zero = true;
              break;
            }
            mono.xe[idx] -= kk;
            mono.pe[idx] -= kk;
          }
        }
        if (!zero) out.add_term(mono, coeff_base * RatFunc(factor));

        // advance odometer
        size_t t = 0;
        for (; t < overlap.size(); ++t) {
          const size_t idx = overlap[t];
          const int cap = h_zero ? 0 : std::min(m1.pe[idx], m2.xe[idx]);
          if (k[t] < cap) {
            ++k[t];
            break;
          }
          k[t] = 0;
        }
        if (t == overlap.size()) break;
      }
    }
  }
}

}  // namespace

WeylElement multiply(const WeylElement& a, const WeylElement& b, MulPolicy policy) {
  if (!(a.signature() == b.signature())) throw SignatureMismatch();
  WeylElement out(a.signature());
  for (const auto& [m1, c1] : a.terms())
    for (const auto& [m2, c2] : b.terms())
      multiply_terms(a.signature(), m1, c1, m2, c2, policy, out);
  return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
  return multiply(a, b) - multiply(b, a);
}

WeylElement e_map(const WeylElement& a) {
  WeylElement out(a.signature());
  for (const auto& [m, c] : a.terms()) {
    Monomial n = m;
    n.pu = 0;
    n.pv = 0;
    // e(w p_u^j p_v^k) = w v^j u^k
    RatFunc f = c * RatFunc(BiPoly::monomial(m.pv, m.pu, Rat(1)));
    out.add_term(n, f);
  }
  return out;
}

WeylElement alpha_s(const WeylElement& a, const Rat& s) {
  const Rat& h = a.signature().h;
  WeylElement out(a.signature());
  for (const auto& [m, c] : a.terms()) {
    if (m.pv != 0 || c.depends_on(Var::V)) throw DependsOnV(to_string(a.signature(), m, c));
    Rat factor(1);
    for (int t = 0; t < m.pu; ++t) factor *= s - Rat(t) * h;
    Monomial n = m;
    n.pu = 0;
    RatFunc f = c * RatFunc(factor);
    if (m.pu > 0) f = f / RatFunc(BiPoly::monomial(m.pu, 0, Rat(1)));
    out.add_term(n, f);
  }
  return out;
}

std::map<std::pair<int, int>, WeylElement> strip_coeff_grid(const WeylElement& a) {
  std::map<std::pair<int, int>, WeylElement> out;
  const AlgebraSignature& sig = a.signature();
  for (const auto& [m, c] : a.terms()) {
    if (m.pv != 0 || c.depends_on(Var::V)) throw DependsOnV(to_string(sig, m, c));
    if (!c.is_polynomial()) throw NotPolynomialInU(to_string(sig, m, c));
    Monomial n = m;
    n.pu = 0;
    for (const auto& [e, q] : c.num().terms()) {
      assert(e.dv == 0);
      auto key = std::make_pair(e.du, static_cast<int>(m.pu));
      auto it = out.find(key);
      if (it == out.end()) it = out.emplace(key, WeylElement::zero(sig)).first;
      it->second.add_term(n, RatFunc(q));
    }
  }
  // drop buckets that cancelled to zero
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<int, WeylElement> split_by_pu(const WeylElement& a) {
  std::map<int, WeylElement> out;
  for (const auto& [m, c] : a.terms()) {
    Monomial n = m;
    n.pu = 0;
    auto it = out.find(m.pu);
    if (it == out.end()) it = out.emplace(m.pu, WeylElement::zero(a.signature())).first;
    it->second.add_term(n, c);
  }
  return out;
}

WeylElement swap_uv_transpose(const WeylElement& a) {
  const AlgebraSignature& s = a.signature();
  AlgebraSignature st{s.N, s.M, s.h};
  WeylElement out(st);
  for (const auto& [m, c] : a.terms()) {
    Monomial n = Monomial::unit(st.M, st.N);
    for (int i = 0; i < s.M; ++i)
      for (int j = 0; j < s.N; ++j) {
        n.xe[static_cast<size_t>(j) * st.N + i] = m.xe[static_cast<size_t>(i) * s.N + j];
        n.pe[static_cast<size_t>(j) * st.N + i] = m.pe[static_cast<size_t>(i) * s.N + j];
      }
    n.pu = m.pv;
    n.pv = m.pu;
    RatFunc f(c.num().swapped_vars(), c.den_u().swapped_vars() * c.den_v().swapped_vars());
    out.add_term(n, f);
  }
  return out;
}

bool equal_ignoring_h(const WeylElement& a, const WeylElement& b) {
  return a.terms() == b.terms();
}

std::optional<std::pair<std::string, std::string>> first_mismatch(const WeylElement& a,
                                                                  const WeylElement& b) {
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ia == ea) return std::make_pair(std::string("0"), to_string(b.signature(), ib->first, ib->second));
    if (ib == eb) return std::make_pair(to_string(a.signature(), ia->first, ia->second), std::string("0"));
    if (ia->first < ib->first)
      return std::make_pair(to_string(a.signature(), ia->first, ia->second), std::string("0"));
    if (ib->first < ia->first)
      return std::make_pair(std::string("0"), to_string(b.signature(), ib->first, ib->second));
    if (!(ia->second == ib->second))
      return std::make_pair(to_string(a.signature(), ia->first, ia->second),
                            to_string(b.signature(), ib->first, ib->second));
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

namespace {

std::string factors_string(const AlgebraSignature& sig, const Monomial& m) {
  std::ostringstream os;
  auto emit = [&os](const std::string& name, int e) {
    if (e == 0) return;
    os << "*" << name;
    if (e > 1) os << "^" << e;
  };
  for (int i = 0; i < sig.M; ++i)
    for (int j = 0; j < sig.N; ++j)
      emit("x[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
           m.xe[static_cast<size_t>(i) * sig.N + j]);
  for (int i = 0; i < sig.M; ++i)
    for (int j = 0; j < sig.N; ++j)
      emit("p[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
           m.pe[static_cast<size_t>(i) * sig.N + j]);
  emit("pu", m.pu);
  emit("pv", m.pv);
  return os.str();
}

}  // namespace

std::string to_string(const AlgebraSignature& sig, const Monomial& m, const RatFunc& coeff) {
  return coeff.to_string() + factors_string(sig, m);
}

std::string to_string(const WeylElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << factors_string(a.signature(), m);
  }
  return os.str();
}

}  // namespace capelli
