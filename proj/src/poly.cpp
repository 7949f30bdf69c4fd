#include "lindel/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lindel {

Poly poly_zero() { return Poly(); }

Poly poly_const(const Ring& R, const Scalar& c) {
  if (c.is_zero()) return Poly();
  return Poly::raw({Term{Monomial(R.nvars()), c}});
}

Poly poly_term(const Ring& R, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return Poly();
  (void)R;
  return Poly::raw({Term{m, c}});
}

Poly poly_var(const Ring& R, size_t i) {
  return poly_term(R, Monomial::var(R.nvars(), i), Scalar::one(R.field));
}

Poly poly_make(const Ring& R, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return mono_cmp(a.m, b.m, R.order) > 0;
  });
  std::vector<Term> out;
  for (auto& t : ts) {
    if (t.c.is_zero()) continue;
    if (!out.empty() && out.back().m == t.m)
      out.back().c = out.back().c + t.c;
    else
      out.push_back(t);
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  return Poly::raw(std::move(out));
}

Poly add(const Ring& R, const Poly& a, const Poly& b) {
  std::vector<Term> out;
  out.reserve(a.nterms() + b.nterms());
  size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    int c = mono_cmp(ta[i].m, tb[j].m, R.order);
    if (c > 0) out.push_back(ta[i++]);
    else if (c < 0) out.push_back(tb[j++]);
    else {
      Scalar s = ta[i].c + tb[j].c;
      if (!s.is_zero()) out.push_back(Term{ta[i].m, s});
      ++i; ++j;
    }
  }
  while (i < ta.size()) out.push_back(ta[i++]);
  while (j < tb.size()) out.push_back(tb[j++]);
  return Poly::raw(std::move(out));
}

Poly neg(const Poly& a) {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.c = -t.c;
  return Poly::raw(std::move(out));
}

Poly sub(const Ring& R, const Poly& a, const Poly& b) { return add(R, a, neg(b)); }

Poly scale(const Poly& a, const Scalar& c) {
  if (c.is_zero()) return Poly();
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.c = t.c * c;
  return Poly::raw(std::move(out));
}

Poly mul_term(const Ring& R, const Poly& a, const Monomial& m, const Scalar& c) {
  (void)R;
  if (c.is_zero()) return Poly();
  std::vector<Term> out = a.terms();
  for (auto& t : out) {
    t.m = t.m * m;
    t.c = t.c * c;
  }
  return Poly::raw(std::move(out));  // monomial multiplication preserves order
}

Poly mul(const Ring& R, const Poly& a, const Poly& b) {
  Poly acc;
  for (auto& t : b.terms()) acc = add(R, acc, mul_term(R, a, t.m, t.c));
  return acc;
}

Poly homog_part(const Ring& R, const Poly& a, uint32_t d) {
  (void)R;
  std::vector<Term> out;
  for (auto& t : a.terms())
    if (t.m.degree() == d) out.push_back(t);
  return Poly::raw(std::move(out));
}

Poly initial_form(const Ring& R, const Poly& a) {
  if (a.is_zero()) return a;
  return homog_part(R, a, a.min_degree());
}

Poly exact_div(const Ring& R, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: zero divisor");
  Poly rem = a, q;
  while (!rem.is_zero()) {
    if (!b.lm().divides(rem.lm()))
      throw StructuralError("exact_div: not divisible");
    Monomial m = rem.lm() / b.lm();
    Scalar c = rem.lc() / b.lc();
    q = add(R, q, poly_term(R, m, c));
    rem = sub(R, rem, mul_term(R, b, m, c));
  }
  return q;
}

Poly make_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return scale(a, a.lc().inv());
}

Poly normalize_content(const Ring& R, const Poly& a) {
  if (a.is_zero()) return a;
  if (R.field.kind == Field::Kind::prime) return make_monic(a);
  // lcm of denominators / gcd of numerators
  Integer den(1), num(0);
  for (auto& t : a.terms()) {
    const Rational& q = t.c.rat();
    den = den * q.den() / Integer::gcd(den, q.den());
    num = Integer::gcd(num, q.num());
  }
  Rational f(den, num);
  Scalar s = Scalar::of_rational(R.field, f);
  Poly r = scale(a, s);
  if (r.lc().rat().num().sign() < 0) r = neg(r);
  return r;
}

std::string poly_str(const Ring& R, const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : a.terms()) {
    Scalar c = t.c;
    bool negc = !c.in_prime_field() && c.rat().num().sign() < 0;
    if (first) {
      if (negc) { os << "-"; c = -c; }
    } else {
      os << (negc ? " - " : " + ");
      if (negc) c = -c;
    }
    first = false;
    bool unit = c.is_one();
    bool any = false;
    if (!unit || t.m.is_one()) { os << c.str(); any = true; }
    for (size_t i = 0; i < R.nvars(); ++i) {
      if (t.m[i] == 0) continue;
      if (any) os << "*";
      os << R.vars[i];
      if (t.m[i] > 1) os << "^" << t.m[i];
      any = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// DSL parser
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& text) : s(text) {}

  void advance() {
    if (i < s.size()) {
      if (s[i] == '\n') { ++line; col = 1; }
      else ++col;
      ++i;
    }
  }
  void skip_ws() {
    while (i < s.size()) {
      if (std::isspace((unsigned char)s[i])) advance();
      else if (s[i] == '#') {
        while (i < s.size() && s[i] != '\n') advance();
      } else break;
    }
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& m) { throw ParseError(m, line, col); }
  bool try_char(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { advance(); return true; }
    return false;
  }
  void expect_char(char c) {
    if (!try_char(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    if (i >= s.size() || !(std::isalpha((unsigned char)s[i]) || s[i] == '_'))
      fail("expected identifier");
    std::string r;
    while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) {
      r.push_back(s[i]);
      advance();
    }
    return r;
  }
  std::string number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected number");
    std::string r;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
      r.push_back(s[i]);
      advance();
    }
    return r;
  }
};

struct PolyParser {
  Lexer& lx;
  const Ring& R;

  int var_index(const std::string& name) {
    for (size_t k = 0; k < R.vars.size(); ++k)
      if (R.vars[k] == name) return (int)k;
    return -1;
  }

  // factor := number [/ number] | var [^ number]
  Poly factor() {
    lx.skip_ws();
    if (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i])) {
      Integer n = Integer::from_string(lx.number());
      Integer d(1);
      if (lx.try_char('/')) d = Integer::from_string(lx.number());
      return poly_const(R, Scalar::of_rational(R.field, Rational(n, d)));
    }
    std::string name = lx.ident();
    int k = var_index(name);
    if (k < 0) lx.fail("unknown variable '" + name + "'");
    uint16_t e = 1;
    if (lx.try_char('^')) {
      long long v = std::stoll(lx.number());
      if (v < 0 || v > 60000) lx.fail("exponent out of range");
      e = (uint16_t)v;
    }
    return poly_term(R, Monomial::var(R.nvars(), (size_t)k, e), Scalar::one(R.field));
  }

  Poly product() {
    Poly p = factor();
    while (lx.try_char('*')) p = mul(R, p, factor());
    return p;
  }

  Poly sum() {
    bool negfirst = false;
    if (lx.try_char('-')) negfirst = true;
    else lx.try_char('+');
    Poly p = product();
    if (negfirst) p = neg(p);
    for (;;) {
      lx.skip_ws();
      char c = lx.i < lx.s.size() ? lx.s[lx.i] : '\0';
      if (c == '+' || c == '-') {
        lx.advance();
        Poly q = product();
        p = c == '+' ? add(R, p, q) : sub(R, p, q);
      } else break;
    }
    return p;
  }
};

Field parse_field(Lexer& lx) {
  std::string f = lx.ident();
  if (f == "Q") return Field::Q();
  if (f.size() > 1 && f[0] == 'F') {
    uint32_t p = (uint32_t)std::stoul(f.substr(1));
    if (p < 2) lx.fail("bad prime");
    return Field::Fp(p);
  }
  lx.fail("expected field Q or F<p>");
}

}  // namespace

Poly parse_poly(const Ring& R, const std::string& text) {
  Lexer lx(text);
  PolyParser pp{lx, R};
  if (lx.peek() == '0') {
    lx.advance();
    if (lx.eof()) return poly_zero();
    lx.fail("unexpected input after 0");
  }
  Poly p = pp.sum();
  if (!lx.eof()) lx.fail("unexpected trailing input");
  return p;
}

RingPresentation parse_ring(const std::string& text) {
  Lexer lx(text);
  RingPresentation P;
  std::string kw = lx.ident();
  if (kw != "ring") lx.fail("expected 'ring'");
  P.ring.field = parse_field(lx);
  lx.expect_char('[');
  if (!lx.try_char(']')) {
    for (;;) {
      std::string v = lx.ident();
      for (auto& w : P.ring.vars)
        if (w == v) lx.fail("duplicate variable '" + v + "'");
      P.ring.vars.push_back(v);
      if (lx.try_char(']')) break;
      lx.expect_char(',');
    }
  }
  if (P.ring.vars.size() > 16) lx.fail("at most 16 variables are supported");
  P.ring.order = OrderSpec{OrderSpec::Kind::degrevlex, 0};
  P.local = false;
  lx.skip_ws();
  if (!lx.eof() && lx.peek() != ';') {
    std::string opt = lx.ident();
    if (opt == "order") {
      std::string o = lx.ident();
      if (o == "degrevlex") P.ring.order.kind = OrderSpec::Kind::degrevlex;
      else if (o == "negdegrevlex") {
        P.ring.order.kind = OrderSpec::Kind::negdegrevlex;
        P.local = true;
      } else lx.fail("unknown order '" + o + "'");
    } else if (opt == "local") {
      P.ring.order.kind = OrderSpec::Kind::negdegrevlex;
      P.local = true;
    } else {
      lx.fail("expected 'order', 'local' or ';'");
    }
  }
  lx.expect_char(';');
  if (!lx.eof()) {
    std::string kw2 = lx.ident();
    if (kw2 != "ideal") lx.fail("expected 'ideal'");
    lx.ident();  // ideal name, metadata only
    lx.expect_char('=');
    PolyParser pp{lx, P.ring};
    for (;;) {
      lx.skip_ws();
      if (lx.peek() == '0') {
        // allow explicit zero generators (e.g. "ideal I = 0;")
        lx.advance();
      } else {
        Poly g = pp.sum();
        if (!g.is_zero()) P.gens.push_back(g);
      }
      if (lx.try_char(',')) continue;
      break;
    }
    lx.expect_char(';');
    if (!lx.eof()) lx.fail("unexpected trailing input");
  }
  // every generator must lie in the square of the maximal ideal
  for (auto& g : P.gens) {
    if (g.min_degree() < 2)
      throw StructuralError("generator '" + poly_str(P.ring, g) +
                            "' is not contained in the square of the maximal ideal");
  }
  P.homogeneous = true;
  for (auto& g : P.gens)
    if (!g.homogeneous()) P.homogeneous = false;
  return P;
}

std::string RingPresentation::str() const {
  std::ostringstream os;
  os << "ring " << ring.field.str() << "[";
  for (size_t i = 0; i < ring.vars.size(); ++i) {
    if (i) os << ",";
    os << ring.vars[i];
  }
  os << "]";
  if (local) os << " local";
  os << "; ideal I = ";
  if (gens.empty()) os << "0";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << poly_str(ring, gens[i]);
  }
  os << ";";
  return os.str();
}

std::string print_presentation(const RingPresentation& P) { return P.str(); }

}  // namespace lindel
