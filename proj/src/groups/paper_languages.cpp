#include "conjlang/groups/paper_languages.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "conjlang/fsa/operations.hpp"
#include "conjlang/groups/registry.hpp"

namespace conjlang {

namespace {

using R = Regex;

R lit(const std::string& s) { return R::literal(s); }
R any(const std::vector<std::string>& s) { return R::any_of(s); }
R star(R r) { return R::star(std::move(r)); }
R plus(R r) { return R::plus(std::move(r)); }
R cat(std::vector<R> parts) { return R::concat(std::move(parts)); }
R alt(std::vector<R> parts) { return R::union_of(std::move(parts)); }
R one() { return R::epsilon(); }
R opt(R r) { return R::optional(std::move(r)); }

// Expression builders over one alphabet.
struct Builder {
  Alphabet a;
  Dfa re(const R& r) const { return to_dfa(r, a); }
  Dfa ins(const Dfa& x, const Dfa& y) const { return to_dfa(insertion(x, y)); }
  Dfa ins(const R& x, const R& y) const { return ins(re(x), re(y)); }
  Dfa ins(const Dfa& x, const R& y) const { return ins(x, re(y)); }
  Dfa cat(const Dfa& x, const Dfa& y) const { return to_dfa(concatenation(x, y)); }
  Dfa any_of(const std::vector<Dfa>& parts) const { return union_all(a, parts); }
  Dfa words(const std::vector<std::string>& ws) const {
    std::vector<Word> v;
    for (const auto& w : ws) v.push_back(a.parse(w));
    return minimize(Dfa::from_words(a, v));
  }
};

Builder builder_for(const std::string& group) { return Builder{make_group(group)->alphabet()}; }

// a^η, b^ζ
std::string pw(const char* letter, int sign) {
  std::string s(letter);
  return sign > 0 ? s : std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))));
}

const int signs[2] = {1, -1};

// ---- Z^2 x| Z/2 over Z = {a, A, b, B, t}

Dfa geo_G_Z() {
  Builder b = builder_for("zd2_Z");
  std::vector<R> parts;
  for (int eta : signs)
    for (int zeta : signs) {
      R left = star(any({pw("a", eta), pw("b", zeta)}));
      R right = star(any({pw("a", zeta), pw("b", eta)}));
      parts.push_back(left);
      parts.push_back(cat({left, lit("t"), right}));
    }
  return b.re(alt(parts));
}

Dfa sl_G_Z() {
  Builder b = builder_for("zd2_Z");
  return b.re(cat({alt({star(lit("a")), star(lit("A"))}), alt({star(lit("b")), star(lit("B"))}), opt(lit("t"))}));
}

Dfa geocl_G_Z() {
  Builder b = builder_for("zd2_Z");
  std::vector<R> parts;
  for (int eta : signs) {
    for (int zeta : signs) parts.push_back(star(any({pw("a", eta), pw("b", zeta)})));
    R same = star(any({pw("a", eta), pw("b", eta)}));
    parts.push_back(cat({same, lit("t"), same}));
  }
  return b.re(alt(parts));
}

Dfa mincl_G_Z() {
  Builder b = builder_for("zd2_Z");
  std::vector<R> parts;
  for (int eta : signs) {
    for (int zeta : signs) parts.push_back(cat({star(lit(pw("a", eta))), star(lit(pw("b", zeta)))}));
    parts.push_back(cat({star(lit(pw("a", eta))), star(lit(pw("b", eta))), lit("t")}));
  }
  return b.re(alt(parts));
}

// Same length counts as the shortlex conjugacy representatives of (G,Z):
// a^i b^j with |i| > |j| as (a^η b^ζ)^{|j|} (a^η)^{|i|-|j|}, a^i b^{±i} as
// blocks of two letters, and a^i t.
Dfa conjsl_count_G_Z() {
  Builder b = builder_for("zd2_Z");
  std::vector<R> parts{one(), plus(lit("a")), plus(lit("A")), lit("t"), cat({plus(lit("a")), lit("t")}),
                       cat({plus(lit("A")), lit("t")}), plus(R::word({"a", "b"})), plus(R::word({"A", "B"})),
                       plus(R::word({"a", "B"}))};
  for (int eta : signs)
    for (int zeta : signs)
      parts.push_back(cat({plus(R::word({pw("a", eta), pw("b", zeta)})), plus(lit(pw("a", eta)))}));
  return b.re(alt(parts));
}

// ---- Z^2 x| Z/2 over X = {a, c, A, C, d, D, t}

// Letter map used by the "minus" variants: every generator replaced by its
// inverse.
using Namer = std::function<std::string(const std::string&)>;
const Namer same_letters = [](const std::string& s) { return s; };
const Namer inverted = [](const std::string& s) {
  if (s == "t") return s;
  char c = s[0];
  return std::string(1, std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c))
                                                                     : static_cast<char>(std::tolower(c)));
};

Dfa piece_L1(const Namer& n) {
  Builder b = builder_for("zd2_X");
  Dfa outer = b.ins(plus(lit(n("c"))), any({n("a"), n("c")}));
  Dfa inner = b.ins(plus(lit(n("C"))), any({n("A"), n("C")}));
  Dfa wrapped = b.cat(b.cat(b.re(lit("t")), inner), b.re(lit("t")));
  return b.ins(outer, wrapped);
}

Dfa piece_L2(const Namer& n) {
  Builder b = builder_for("zd2_X");
  Dfa x = b.ins(plus(lit(n("c"))), cat({lit("t"), lit(n("C")), lit(n("C")), star(lit(n("C"))), lit("t")}));
  return b.ins(x, lit(n("d")));
}

Dfa piece_L3(const Namer& n) {
  Builder b = builder_for("zd2_X");
  Dfa x = b.ins(cat({lit(n("c")), lit(n("c")), star(lit(n("c")))}), cat({lit("t"), plus(lit(n("C"))), lit("t")}));
  return b.ins(x, lit(n("D")));
}

Dfa piece_L4(const Namer& n) {
  Builder b = builder_for("zd2_X");
  Dfa x = b.ins(cat({lit(n("c")), lit(n("c")), star(lit(n("c")))}), lit(n("D")));
  return b.ins(x, opt(lit(n("a"))));
}

Dfa piece_L5(const Namer& n) {
  Builder b = builder_for("zd2_X");
  Dfa x = b.ins(cat({lit(n("c")), lit(n("c")), star(lit(n("c")))}), lit(n("D")));
  x = b.ins(x, lit(n("D")));
  return b.ins(x, any({n("a"), n("c")}));
}

Dfa geocl_ab_G_X() {
  Builder b = builder_for("zd2_X");
  return b.any_of({b.ins(star(any({"c", "d"})), opt(lit("a"))), b.ins(star(any({"C", "D"})), opt(lit("A")))});
}

Dfa mincl_ab_G_X() {
  Builder b = builder_for("zd2_X");
  return b.re(alt({cat({opt(lit("a")), star(lit("c")), star(lit("d"))}),
                   cat({opt(lit("A")), star(lit("C")), star(lit("D"))})}));
}

R big_block(const std::string& c, const std::string& a) {
  return cat({alt({R::word({c, c}), R::word({a, c})}), star(lit(c))});
}

Dfa mincl_big_G_X() {
  Builder b = builder_for("zd2_X");
  R up = big_block("c", "a"), down = big_block("C", "A");
  return b.re(alt({cat({up, lit("t"), down, lit("t")}), cat({down, lit("t"), up, lit("t")})}));
}

Dfa sphcl_big_G_X() {
  Builder b = builder_for("zd2_X");
  return b.re(cat({big_block("c", "a"), lit("t"), big_block("C", "A"), lit("t")}));
}

Dfa mincl_mixed_G_X() {
  Builder b = builder_for("zd2_X");
  auto cc = [](const std::string& c) { return cat({lit(c), lit(c), star(lit(c))}); };
  return b.re(alt({cat({opt(lit("a")), cc("c"), lit("D")}), cat({any({"a", "c"}), cc("c"), lit("D"), lit("D")}),
                   cat({opt(lit("A")), cc("C"), lit("d")}), cat({any({"A", "C"}), cc("C"), lit("d"), lit("d")})}));
}

Dfa geocl_t_G_X() {
  Builder b = builder_for("zd2_X");
  R up = star(any({"c", "d"})), down = star(any({"C", "D"}));
  return b.any_of({b.ins(cat({up, lit("t"), up}), opt(lit("a"))), b.ins(cat({down, lit("t"), down}), opt(lit("A")))});
}

Dfa mincl_t_G_X() {
  Builder b = builder_for("zd2_X");
  return b.re(alt({cat({opt(lit("a")), star(lit("c")), opt(lit("d")), lit("t"), star(lit("c"))}),
                   cat({lit("t"), lit("a"), star(lit("c"))}),
                   cat({opt(lit("A")), star(lit("C")), opt(lit("D")), lit("t"), star(lit("C"))}),
                   cat({lit("t"), lit("A"), star(lit("C"))})}));
}

Dfa sphcl_t_G_X() {
  Builder b = builder_for("zd2_X");
  return b.re(alt({cat({opt(lit("a")), star(lit("c")), lit("t")}), cat({opt(lit("A")), star(lit("C")), lit("t")})}));
}

// The classes [a^m B^n] with 1 ≤ m, n ≤ 2 contribute finitely many words;
// they are listed explicitly here (found by exhaustive search of the ball
// of radius 10; all such words have length at most 4).
const std::vector<std::string> finite_geocl_words = {
    "cD",   "Cd",   "dC",   "Dc",   "acD",  "aDc",  "caD",  "cDa",  "ACd",  "AdC",  "CAd",
    "CdA",  "dAC",  "dCA",  "Dac",  "Dca",  "ccDD", "cDcD", "cDDc", "ctCt", "CCdd", "CdCd",
    "CddC", "Ctct", "dCCd", "dCdC", "ddCC", "DccD", "DcDc", "DDcc", "tctC", "tCtc"};
const std::vector<std::string> finite_mincl_words = {"cD", "Cd", "acD", "ACd", "ccDD", "CCdd"};
const std::vector<std::string> finite_sphcl_words = {"cD", "acD", "ACd", "ccDD"};

Dfa geocl_G_X() {
  Builder b = builder_for("zd2_X");
  std::vector<Dfa> parts{geocl_ab_G_X(), geocl_t_G_X(), b.words(finite_geocl_words)};
  for (const Namer* n : {&same_letters, &inverted}) {
    parts.push_back(piece_L1(*n));
    parts.push_back(piece_L2(*n));
    parts.push_back(piece_L3(*n));
    parts.push_back(piece_L4(*n));
    parts.push_back(piece_L5(*n));
  }
  return b.any_of(parts);
}

Dfa mincl_G_X() {
  Builder b = builder_for("zd2_X");
  return b.any_of({mincl_ab_G_X(), mincl_big_G_X(), mincl_mixed_G_X(), mincl_t_G_X(), b.words(finite_mincl_words)});
}

Dfa sphcl_G_X() {
  Builder b = builder_for("zd2_X");
  return b.any_of({mincl_ab_G_X(), sphcl_big_G_X(), mincl_mixed_G_X(), sphcl_t_G_X(), b.words(finite_sphcl_words)});
}

// Words the displayed unions leave out, found by exhaustive comparison:
// in [a^2 B^n] and [a^n B^2] (n ≥ 3) both elements of the class have
// minimal length, b^2 also has the geodesic tct, and a^m B^3 (m ≥ 3 odd)
// has t-free geodesics c^k D^3.
Dfa extra_geocl_G_X(const Namer& n) {
  Builder b = builder_for("zd2_X");
  Dfa inner = b.ins(plus(lit(n("C"))), any({n("A"), n("C")}));
  Dfa e1 = b.ins(b.re(lit(n("c"))), b.cat(b.cat(b.re(lit("t")), inner), b.re(lit("t"))));
  Dfa e2 = b.ins(b.ins(plus(lit(n("C"))), any({n("A"), n("C")})), cat({lit("t"), lit(n("c")), lit("t")}));
  Dfa e3 = b.ins(cat({lit(n("c")), lit(n("c")), lit(n("c")), star(lit(n("c")))}), lit(n("D")));
  e3 = b.ins(b.ins(e3, lit(n("D"))), lit(n("D")));
  return b.any_of({e1, e2, e3});
}

R two_t_small(const Namer& n) {
  return cat({lit(n("c")), lit("t"), any({n("A"), n("C")}), plus(lit(n("C"))), lit("t")});
}

Dfa geocl_G_X_corrected() {
  Builder b = builder_for("zd2_X");
  return b.any_of({geocl_G_X(), extra_geocl_G_X(same_letters), extra_geocl_G_X(inverted)});
}

Dfa mincl_G_X_corrected() {
  Builder b = builder_for("zd2_X");
  return b.any_of({mincl_G_X(), b.re(alt({two_t_small(same_letters), two_t_small(inverted)}))});
}

// Class representatives: for [a^2 B^n], n ≥ 3, the word c t .. t wins over
// the C..d^2 form.
Dfa sphcl_G_X_corrected() {
  Builder b = builder_for("zd2_X");
  auto cc = [](const std::string& c) { return cat({lit(c), lit(c), star(lit(c))}); };
  Dfa mixed = b.re(alt({cat({opt(lit("a")), cc("c"), lit("D")}), cat({any({"a", "c"}), cc("c"), lit("D"), lit("D")}),
                        cat({opt(lit("A")), cc("C"), lit("d")}), two_t_small(same_letters)}));
  return b.any_of({mincl_ab_G_X(), sphcl_big_G_X(), mixed, sphcl_t_G_X(), b.words(finite_sphcl_words)});
}

// ---- Z^2 x| D8 over Z' = {a, A, b, B, t, u}

Dfa piece_K_L1() {
  Builder b = builder_for("zd8_Zp");
  std::vector<Dfa> parts;
  for (int eta : signs)
    for (int zeta : signs) parts.push_back(b.ins(star(any({pw("a", eta), pw("b", zeta)})), opt(lit("u"))));
  return b.any_of(parts);
}

Dfa piece_K_L2(bool require_u) {
  Builder b = builder_for("zd8_Zp");
  std::vector<Dfa> parts;
  for (int eta : signs)
    for (int zeta : signs) {
      Dfa outer = b.ins(star(any({pw("a", eta), pw("b", zeta)})), require_u ? lit("u") : opt(lit("u")));
      Dfa inner = b.ins(star(any({pw("a", zeta), pw("b", eta)})), lit("u"));
      Dfa wrapped = b.cat(b.cat(b.re(lit("t")), inner), b.re(lit("t")));
      parts.push_back(b.ins(outer, wrapped));
    }
  return b.any_of(parts);
}

Dfa piece_K_L3() {
  Builder b = builder_for("zd8_Zp");
  std::vector<Dfa> parts;
  for (int eta : signs)
    for (int zeta : signs) {
      R body = cat({star(any({pw("a", eta), pw("b", zeta)})), lit("t"), star(any({pw("a", zeta), pw("b", eta)}))});
      parts.push_back(b.ins(body, opt(lit("u"))));
    }
  return b.any_of(parts);
}

Dfa piece_K_L3p() {
  Builder b = builder_for("zd8_Zp");
  std::vector<Dfa> parts;
  for (int eta : signs) {
    Dfa x = b.ins(star(any({pw("a", eta), pw("b", eta)})), lit("t"));
    parts.push_back(b.ins(x, opt(lit("u"))));
  }
  return b.any_of(parts);
}

Dfa geo_K_Zp() {
  Builder b = builder_for("zd8_Zp");
  return b.any_of({piece_K_L1(), piece_K_L2(false), piece_K_L3()});
}

// Adds the geodesics of a^i b^j utu, which have one u on each side of t.
Dfa geo_K_Zp_corrected() {
  Builder b = builder_for("zd8_Zp");
  std::vector<Dfa> parts{geo_K_Zp()};
  for (int eta : signs)
    for (int zeta : signs) {
      Dfa left = b.ins(star(any({pw("a", eta), pw("b", zeta)})), lit("u"));
      Dfa right = b.ins(star(any({pw("a", zeta), pw("b", eta)})), lit("u"));
      parts.push_back(b.cat(b.cat(left, b.re(lit("t"))), right));
    }
  return b.any_of(parts);
}

Dfa sl_K_Zp() {
  Builder b = builder_for("zd8_Zp");
  R tail = alt({one(), lit("t"), lit("u"), R::word({"t", "u"}), R::word({"u", "t"}), R::word({"t", "u", "t"}),
                R::word({"u", "t", "u"}), R::word({"t", "u", "t", "u"})});
  return b.re(cat({alt({star(lit("a")), star(lit("A"))}), alt({star(lit("b")), star(lit("B"))}), tail}));
}

Dfa geocl_K_Zp() {
  Builder b = builder_for("zd8_Zp");
  return b.any_of({piece_K_L1(), piece_K_L2(true), piece_K_L3p()});
}

Dfa mincl_K_Zp() {
  Builder b = builder_for("zd8_Zp");
  std::vector<R> parts;
  for (int eta : signs) {
    for (int zeta : signs)
      parts.push_back(cat({star(lit(pw("a", eta))), star(lit(pw("b", zeta))),
                           alt({one(), lit("u"), R::word({"t", "u", "t", "u"})})}));
    parts.push_back(cat({star(lit(pw("a", eta))), star(lit(pw("b", eta))),
                         alt({lit("t"), R::word({"t", "u"}), R::word({"u", "t"})})}));
  }
  return b.re(alt(parts));
}

struct Entry {
  PaperExpression info;
  std::function<Dfa()> build;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {{"geo_G_Z", "zd2_Z", "Geo", "U_{η,ζ} {a^η,b^ζ}* ∪ {a^η,b^ζ}* t {a^ζ,b^η}*"}, geo_G_Z},
      {{"sl_G_Z", "zd2_Z", "SL", "{a^i b^j t^ε}"}, sl_G_Z},
      {{"geocl_G_Z", "zd2_Z", "ConjGeo", "U_{η,ζ} {a^η,b^ζ}* ∪ U_η {a^η,b^η}* t {a^η,b^η}*"}, geocl_G_Z},
      {{"mincl_G_Z", "zd2_Z", "MinCl", "U_{η,ζ} (a^η)*(b^ζ)* ∪ U_η (a^η)*(b^η)* t"}, mincl_G_Z},
      {{"conjsl_count_G_Z", "zd2_Z", "counting",
        "1 ∪ a+ ∪ A+ ∪ {1,a+,A+}t ∪ (ab)+ ∪ (AB)+ ∪ (aB)+ ∪ U_{η,ζ} (a^η b^ζ)+ (a^η)+"},
       conjsl_count_G_Z},
      {{"geocl_ab_G_X", "zd2_X", "piece", "({c,d}* ← {1,a}) ∪ ({C,D}* ← {1,A})"}, geocl_ab_G_X},
      {{"L1_G_X", "zd2_X", "piece", "[c+ ← {a,c}] ← [t (C+ ← {A,C}) t]"}, [] { return piece_L1(same_letters); }},
      {{"L2_G_X", "zd2_X", "piece", "(c+ ← t C^2 C* t) ← d"}, [] { return piece_L2(same_letters); }},
      {{"L3_G_X", "zd2_X", "piece", "(c^2 c* ← t C+ t) ← D"}, [] { return piece_L3(same_letters); }},
      {{"L4_G_X", "zd2_X", "piece", "(c^2 c* ← D) ← {1,a}"}, [] { return piece_L4(same_letters); }},
      {{"L5_G_X", "zd2_X", "piece", "((c^2 c* ← D) ← D) ← {a,c}"}, [] { return piece_L5(same_letters); }},
      {{"L1m_G_X", "zd2_X", "piece", "L1_G_X with every generator inverted"}, [] { return piece_L1(inverted); }},
      {{"L2m_G_X", "zd2_X", "piece", "L2_G_X with every generator inverted"}, [] { return piece_L2(inverted); }},
      {{"L3m_G_X", "zd2_X", "piece", "L3_G_X with every generator inverted"}, [] { return piece_L3(inverted); }},
      {{"L4m_G_X", "zd2_X", "piece", "L4_G_X with every generator inverted"}, [] { return piece_L4(inverted); }},
      {{"L5m_G_X", "zd2_X", "piece", "L5_G_X with every generator inverted"}, [] { return piece_L5(inverted); }},
      {{"geocl_t_G_X", "zd2_X", "piece", "({c,d}* t {c,d}* ← {1,a}) ∪ ({C,D}* t {C,D}* ← {1,A})"}, geocl_t_G_X},
      {{"mincl_ab_G_X", "zd2_X", "piece", "{1,a}c*d* ∪ {1,A}C*D*"}, mincl_ab_G_X},
      {{"mincl_big_G_X", "zd2_X", "piece", "{c^2,ac}c* t {C^2,AC}C* t ∪ {C^2,AC}C* t {c^2,ac}c* t"}, mincl_big_G_X},
      {{"sphcl_big_G_X", "zd2_X", "piece", "{c^2,ac}c* t {C^2,AC}C* t"}, sphcl_big_G_X},
      {{"mincl_mixed_G_X", "zd2_X", "piece", "{1,a}c^2c*D ∪ {a,c}c^2c*D^2 ∪ {1,A}C^2C*d ∪ {A,C}C^2C*d^2"},
       mincl_mixed_G_X},
      {{"mincl_t_G_X", "zd2_X", "piece", "{1,a}c*{1,d}tc* ∪ tac* ∪ {1,A}C*{1,D}tC* ∪ tAC*"}, mincl_t_G_X},
      {{"sphcl_t_G_X", "zd2_X", "piece", "{1,a}c*t ∪ {1,A}C*t"}, sphcl_t_G_X},
      {{"geocl_G_X", "zd2_X", "ConjGeo", "union of the geocl pieces, L1..L5, their inverses and the finite part"},
       geocl_G_X},
      {{"mincl_G_X", "zd2_X", "MinCl", "union of the mincl pieces and the finite part"}, mincl_G_X},
      {{"sphcl_G_X", "zd2_X", "ConjSL", "union of the sphcl pieces and the finite part"}, sphcl_G_X},
      {{"geocl_G_X_corrected", "zd2_X", "ConjGeo",
        "geocl_G_X ∪ c←t(C+←{A,C})t ∪ (C+←{A,C})←tct ∪ ((c^3c*←D)←D)←D and inverted forms"},
       geocl_G_X_corrected},
      {{"mincl_G_X_corrected", "zd2_X", "MinCl", "mincl_G_X ∪ ct{A,C}C+t ∪ Ct{a,c}c+t"}, mincl_G_X_corrected},
      {{"sphcl_G_X_corrected", "zd2_X", "ConjSL", "sphcl_G_X with {A,C}C^2C*d^2 replaced by ct{A,C}C+t"},
       sphcl_G_X_corrected},
      {{"L1_K_Zp", "zd8_Zp", "piece", "U_{η,ζ} {a^η,b^ζ}* ← {1,u}"}, piece_K_L1},
      {{"L2_K_Zp", "zd8_Zp", "piece", "U_{η,ζ} ({a^η,b^ζ}* ← {1,u}) ← t({a^ζ,b^η}* ← u)t"},
       [] { return piece_K_L2(false); }},
      {{"L3_K_Zp", "zd8_Zp", "piece", "U_{η,ζ} {a^η,b^ζ}* t {a^ζ,b^η}* ← {1,u}"}, piece_K_L3},
      {{"L2p_K_Zp", "zd8_Zp", "piece", "U_{η,ζ} ({a^η,b^ζ}* ← u) ← t({a^ζ,b^η}* ← u)t"},
       [] { return piece_K_L2(true); }},
      {{"L3p_K_Zp", "zd8_Zp", "piece", "U_η ({a^η,b^η}* ← t) ← {1,u}"}, piece_K_L3p},
      {{"geo_K_Zp", "zd8_Zp", "Geo", "L1_K_Zp ∪ L2_K_Zp ∪ L3_K_Zp"}, geo_K_Zp},
      {{"geo_K_Zp_corrected", "zd8_Zp", "Geo", "geo_K_Zp ∪ U_{η,ζ} ({a^η,b^ζ}*←u) t ({a^ζ,b^η}*←u)"},
       geo_K_Zp_corrected},
      {{"sl_K_Zp", "zd8_Zp", "SL", "{a^i b^j v : v ∈ {1,t,u,tu,ut,tut,utu,tutu}}"}, sl_K_Zp},
      {{"geocl_K_Zp", "zd8_Zp", "ConjGeo", "L1_K_Zp ∪ L2p_K_Zp ∪ L3p_K_Zp"}, geocl_K_Zp},
      {{"mincl_K_Zp", "zd8_Zp", "MinCl", "U_{η,ζ} (a^η)*(b^ζ)*{1,u,tutu} ∪ U_η (a^η)*(b^η)*{t,tu,ut}"}, mincl_K_Zp},
  };
  return all;
}

}  // namespace

const std::vector<PaperExpression>& paper_expressions() {
  static const std::vector<PaperExpression> list = [] {
    std::vector<PaperExpression> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return list;
}

const PaperExpression& paper_expression(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return e.info;
  throw std::invalid_argument("unknown expression: " + name);
}

Dfa paper_language_dfa(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return minimize(e.build());
  throw std::invalid_argument("unknown expression: " + name);
}

}  // namespace conjlang
