// Propositional proof construction over PROP1-3 and modus ponens.
//
// Derivations are first written with hypotheses (HProof) and then compiled to
// kernel proofs by the deduction theorem. Tautologies are proved by Kalmar's
// construction over their atoms, splitting only on atoms whose value is still
// needed, and cached per skeleton.

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "truthkernel/parser.hpp"
#include "truthkernel/tactics.hpp"

namespace tk {

NotTautology::NotTautology(const Formula& f, std::vector<std::pair<Formula, bool>> falsifying)
    : TacticError([&] {
        std::ostringstream os;
        os << "not a tautology: " << pretty_print(f) << "; falsified by";
        for (const auto& [a, v] : falsifying) os << ' ' << pretty_print(a) << ":=" << (v ? 'T' : 'F');
        return os.str();
      }()),
      counterexample(std::move(falsifying)) {}

namespace {

using K = Formula::Kind;

Formula imp(Formula a, Formula b) { return Formula::imp(std::move(a), std::move(b)); }
Formula neg(Formula a) { return Formula::neg(std::move(a)); }

Proof ax(SchemaId s, Formula f) { return Proof::axiom(s, std::move(f)); }
Proof mp(Proof a, Proof ab) { return Proof::mp(std::move(a), std::move(ab)); }

Proof prop1(const Formula& a, const Formula& b) { return ax(SchemaId::Prop1, imp(a, imp(b, a))); }
Proof prop2(const Formula& a, const Formula& b, const Formula& c) {
  return ax(SchemaId::Prop2, imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c))));
}
Proof prop3(const Formula& a, const Formula& b) { return ax(SchemaId::Prop3, imp(imp(neg(a), neg(b)), imp(b, a))); }

// ---------------------------------------------------------------------------
// Derivations under hypotheses

struct HNode;
using HProof = std::shared_ptr<const HNode>;

struct HNode {
  enum class Kind { Hyp, Thm, MP } kind;
  Formula concl;
  std::optional<Proof> thm;
  HProof minor, major;
  std::vector<Formula> hyps;  // hypotheses this derivation depends on
};

bool has(const std::vector<Formula>& v, const Formula& f) { return std::find(v.begin(), v.end(), f) != v.end(); }

HProof hyp(const Formula& f) { return std::make_shared<const HNode>(HNode{HNode::Kind::Hyp, f, std::nullopt, {}, {}, {f}}); }

HProof thm(const Proof& p) {
  return std::make_shared<const HNode>(HNode{HNode::Kind::Thm, p.conclusion(), p, {}, {}, {}});
}

HProof hmp(const HProof& a, const HProof& ab) {
  if (ab->concl.kind() != K::Imp || !(ab->concl.antecedent() == a->concl))
    throw TacticError("ill-formed modus ponens: " + pretty_print(a->concl) + " / " + pretty_print(ab->concl));
  std::vector<Formula> hs = a->hyps;
  for (const Formula& h : ab->hyps)
    if (!has(hs, h)) hs.push_back(h);
  return std::make_shared<const HNode>(HNode{HNode::Kind::MP, ab->concl.consequent(), std::nullopt, a, ab, std::move(hs)});
}

HProof hmp(const HProof& a, const Proof& ab) { return hmp(a, thm(ab)); }

class Deduction {
 public:
  explicit Deduction(Formula h) : h_(std::move(h)) {}

  // Derivation of h -> concl(p) not depending on h.
  HProof run(const HProof& p) {
    if (auto it = memo_.find(p.get()); it != memo_.end()) return it->second;
    HProof r;
    const Formula& c = p->concl;
    if (!has(p->hyps, h_)) {
      r = hmp(p, prop1(c, h_));
    } else if (p->kind == HNode::Kind::Hyp) {
      r = thm(identity(h_));
    } else {
      const Formula& a = p->minor->concl;
      HProof ha = run(p->minor);
      HProof hab = run(p->major);
      HProof step = hmp(hab, prop2(h_, a, c));
      r = hmp(ha, step);
    }
    memo_.emplace(p.get(), r);
    return r;
  }

 private:
  Formula h_;
  std::unordered_map<const HNode*, HProof> memo_;
};

HProof deduce(const Formula& h, const HProof& p) { return Deduction(h).run(p); }

Proof close(const HProof& p) {
  if (!p->hyps.empty()) throw std::logic_error("internal: undischarged hypothesis " + pretty_print(p->hyps.front()));
  std::unordered_map<const HNode*, Proof> memo;
  auto go = [&](auto&& self, const HProof& q) -> Proof {
    if (auto it = memo.find(q.get()); it != memo.end()) return it->second;
    Proof r = q->kind == HNode::Kind::Thm ? *q->thm : mp(self(self, q->minor), self(self, q->major));
    memo.emplace(q.get(), r);
    return r;
  };
  return go(go, p);
}

// Deduces the hypotheses innermost-first: discharge(p, {a, b}) proves a -> (b -> c).
Proof discharge(HProof p, std::initializer_list<Formula> hyps) {
  std::vector<Formula> hs(hyps);
  for (auto it = hs.rbegin(); it != hs.rend(); ++it) p = deduce(*it, p);
  return close(p);
}

// ---------------------------------------------------------------------------
// Lemma library

// ~a -> (a -> b)
Proof explode(const Formula& a, const Formula& b) {
  HProof na = hyp(neg(a));
  HProof s1 = hmp(na, prop1(neg(a), neg(b)));   // ~b -> ~a
  HProof s2 = hmp(s1, prop3(b, a));             // a -> b
  HProof s3 = hmp(hyp(a), s2);                  // b
  return discharge(s3, {neg(a), a});
}

// ~~a -> a
Proof dneg_elim(const Formula& a) {
  Formula nna = neg(neg(a));
  HProof h = hyp(nna);
  HProof s1 = hmp(h, prop1(nna, neg(neg(nna))));        // ~~~~a -> ~~a
  HProof s2 = hmp(s1, prop3(neg(neg(neg(a))), neg(a)));  // ~a -> ~~~a
  HProof s3 = hmp(s2, prop3(a, nna));                   // ~~a -> a
  return discharge(hmp(h, s3), {nna});
}

// a -> ~~a
Proof dneg_intro(const Formula& a) { return mp(dneg_elim(neg(a)), prop3(neg(neg(a)), a)); }

// (a -> b) -> (~b -> ~a)
Proof contrapose_lemma(const Formula& a, const Formula& b) {
  Formula ab = imp(a, b);
  HProof nna = hyp(neg(neg(a)));
  HProof x = hmp(nna, dneg_elim(a));
  HProof y = hmp(x, hyp(ab));
  HProof nny = hmp(y, dneg_intro(b));
  HProof tail = thm(prop3(neg(a), neg(b)));  // (~~a -> ~~b) -> (~b -> ~a)
  HProof body = deduce(neg(neg(a)), nny);    // ~~a -> ~~b, still under ab
  return discharge(hmp(body, tail), {ab});
}

// a -> (~b -> ~(a -> b))
Proof imp_negation(const Formula& a, const Formula& b) {
  Formula ab = imp(a, b);
  HProof applies = deduce(ab, hmp(hyp(a), hyp(ab)));  // (a -> b) -> b, under a
  HProof r = hmp(applies, contrapose_lemma(ab, b));
  return discharge(r, {a});
}

// (a -> b) -> ((~a -> b) -> b)
Proof cases(const Formula& a, const Formula& b) {
  Formula h1 = imp(a, b);
  Formula h2 = imp(neg(a), b);
  Formula i = imp(a, a);
  HProof nb = hyp(neg(b));
  HProof na = hmp(nb, hmp(hyp(h1), contrapose_lemma(a, b)));
  HProof nna = hmp(nb, hmp(hyp(h2), contrapose_lemma(neg(a), b)));
  HProof ni = hmp(na, hmp(nna, explode(neg(a), neg(i))));
  HProof nb_ni = deduce(neg(b), ni);
  HProof i_b = hmp(nb_ni, prop3(b, i));
  HProof res = hmp(thm(identity(a)), i_b);
  return discharge(res, {h1, h2});
}

// ---------------------------------------------------------------------------
// Kalmar

struct Assignment {
  std::vector<std::optional<bool>> value;  // per atom index
};

class Kalmar {
 public:
  Kalmar(Formula f, std::vector<Formula> atoms) : f_(std::move(f)), atoms_(std::move(atoms)) {}

  Proof prove() {
    Assignment a{std::vector<std::optional<bool>>(atoms_.size())};
    return close(split(a, 0));
  }

 private:
  Formula f_;
  std::vector<Formula> atoms_;

  int atom_index(const Formula& g) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i] == g) return static_cast<int>(i);
    return -1;
  }

  std::optional<bool> eval(const Formula& g, const Assignment& a) const {
    switch (g.kind()) {
      case K::Not: {
        auto v = eval(g.body(), a);
        if (!v) return std::nullopt;
        return !*v;
      }
      case K::Imp: {
        auto l = eval(g.antecedent(), a);
        if (l && !*l) return true;
        auto r = eval(g.consequent(), a);
        if (r && *r) return true;
        if (l && r) return false;
        return std::nullopt;
      }
      default: return a.value[static_cast<std::size_t>(atom_index(g))];
    }
  }

  // Derivation of g (if true) or ~g (if false) from hypotheses on atoms.
  HProof derive(const Formula& g, const Assignment& a) const {
    switch (g.kind()) {
      case K::Not: {
        const Formula& b = g.body();
        HProof pb = derive(b, a);
        if (*eval(b, a)) return hmp(pb, dneg_intro(b));
        return pb;
      }
      case K::Imp: {
        const Formula& l = g.antecedent();
        const Formula& r = g.consequent();
        auto lv = eval(l, a);
        auto rv = eval(r, a);
        if (rv && *rv) return hmp(derive(r, a), prop1(r, l));
        if (lv && !*lv) return hmp(derive(l, a), explode(l, r));
        return hmp(derive(r, a), hmp(derive(l, a), imp_negation(l, r)));
      }
      default: {
        std::size_t i = static_cast<std::size_t>(atom_index(g));
        return hyp(*a.value[i] ? g : neg(g));
      }
    }
  }

  HProof split(Assignment& a, std::size_t next) {
    auto v = eval(f_, a);
    if (v && *v) return derive(f_, a);
    if (v && !*v) throw std::logic_error("internal: Kalmar split reached a falsifying assignment");
    while (next < atoms_.size() && a.value[next]) ++next;
    if (next == atoms_.size()) throw std::logic_error("internal: Kalmar split ran out of atoms");
    const Formula& p = atoms_[next];
    a.value[next] = true;
    HProof pt = split(a, next + 1);
    a.value[next] = false;
    HProof pf = split(a, next + 1);
    a.value[next].reset();
    HProof dt = deduce(p, pt);
    HProof df = deduce(neg(p), pf);
    return hmp(df, hmp(dt, cases(p, f_)));
  }
};

void collect_atoms(const Formula& f, std::vector<Formula>& out) {
  switch (f.kind()) {
    case K::Not: collect_atoms(f.body(), out); return;
    case K::Imp:
      collect_atoms(f.antecedent(), out);
      collect_atoms(f.consequent(), out);
      return;
    default:
      if (!has(out, f)) out.push_back(f);
  }
}

bool truth_value(const Formula& f, const std::vector<Formula>& atoms, unsigned mask) {
  switch (f.kind()) {
    case K::Not: return !truth_value(f.body(), atoms, mask);
    case K::Imp: return !truth_value(f.antecedent(), atoms, mask) || truth_value(f.consequent(), atoms, mask);
    default: {
      auto it = std::find(atoms.begin(), atoms.end(), f);
      return (mask >> (it - atoms.begin())) & 1u;
    }
  }
}

// f with each atom replaced by its schematic letter; atoms are not searched
// inside other atoms.
Formula skeletonize(const Formula& f, const std::vector<Formula>& atoms) {
  switch (f.kind()) {
    case K::Not: return neg(skeletonize(f.body(), atoms));
    case K::Imp: return imp(skeletonize(f.antecedent(), atoms), skeletonize(f.consequent(), atoms));
    default: {
      auto it = std::find(atoms.begin(), atoms.end(), f);
      return schematic_atom(static_cast<std::uint32_t>(it - atoms.begin()));
    }
  }
}

constexpr VarId kSchematicBase = 0xF0000000u;

Formula instantiate_formula(const Formula& f, std::span<const Formula> atoms,
                            std::unordered_map<Formula, Formula>& memo) {
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  Formula r = f;
  switch (f.kind()) {
    case K::Not: r = neg(instantiate_formula(f.body(), atoms, memo)); break;
    case K::Imp:
      r = imp(instantiate_formula(f.antecedent(), atoms, memo), instantiate_formula(f.consequent(), atoms, memo));
      break;
    case K::Tr:
      if (f.lhs().kind() == Term::Kind::Var && f.lhs().var_index() >= kSchematicBase)
        r = atoms[f.lhs().var_index() - kSchematicBase];
      break;
    default: break;
  }
  memo.emplace(f, r);
  return r;
}

Proof instantiate_proof(const Proof& p, std::span<const Formula> atoms) {
  std::unordered_map<Formula, Formula> fmemo;
  std::unordered_map<const void*, Proof> pmemo;
  auto go = [&](auto&& self, const Proof& q) -> Proof {
    if (auto it = pmemo.find(q.id()); it != pmemo.end()) return it->second;
    Proof r = q.kind() == Proof::Kind::Axiom
                  ? ax(q.schema(), instantiate_formula(q.conclusion(), atoms, fmemo))
                  : mp(self(self, q.premises()[0]), self(self, q.premises()[1]));
    pmemo.emplace(q.id(), r);
    return r;
  };
  return go(go, p);
}

class SkeletonCache {
 public:
  Proof get(const Formula& skeleton, std::size_t n_atoms) {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(skeleton); it != cache_.end()) return it->second;
    }
    std::vector<Formula> atoms;
    for (std::size_t i = 0; i < n_atoms; ++i) atoms.push_back(schematic_atom(static_cast<std::uint32_t>(i)));
    Proof p = Kalmar(skeleton, atoms).prove();
    std::lock_guard lock(mu_);
    cache_.emplace(skeleton, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::unordered_map<Formula, Proof> cache_;
};

SkeletonCache& skeleton_cache() {
  static SkeletonCache c;
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface

std::vector<Formula> propositional_atoms(const Formula& f) {
  std::vector<Formula> out;
  collect_atoms(f, out);
  return out;
}

Formula schematic_atom(std::uint32_t i) { return Formula::tr(Term::var(kSchematicBase + i)); }

Proof schematic_taut(const Formula& skeleton, std::span<const Formula> atoms) {
  Proof p = skeleton_cache().get(skeleton, atoms.size());
  return instantiate_proof(p, atoms);
}

Proof taut(const Formula& f) {
  std::vector<Formula> atoms = propositional_atoms(f);
  if (atoms.size() > 16) throw TacticError("taut: too many atoms (" + std::to_string(atoms.size()) + ")");
  for (unsigned mask = 0; mask < (1u << atoms.size()); ++mask) {
    if (!truth_value(f, atoms, mask)) {
      std::vector<std::pair<Formula, bool>> cex;
      for (std::size_t i = 0; i < atoms.size(); ++i) cex.emplace_back(atoms[i], (mask >> i) & 1u);
      throw NotTautology(f, std::move(cex));
    }
  }
  Formula skeleton = skeletonize(f, atoms);
  return schematic_taut(skeleton, atoms).with_macro("(taut \"" + pretty_print(f) + "\")");
}

Proof identity(const Formula& a) {
  Formula aa = imp(a, a);
  Proof s1 = prop2(a, aa, a);              // (a -> ((a -> a) -> a)) -> ((a -> (a -> a)) -> (a -> a))
  Proof s2 = mp(prop1(a, aa), s1);          // (a -> (a -> a)) -> (a -> a)
  return mp(prop1(a, a), s2);
}

Proof hypothetical_syllogism(const Proof& ab, const Proof& bc) {
  const Formula& a = ab.conclusion().antecedent();
  HProof r = hmp(hmp(hyp(a), ab), bc);
  return discharge(r, {a});
}

Proof contrapose(const Proof& ab) {
  const Formula& f = ab.conclusion();
  return mp(ab, contrapose_lemma(f.antecedent(), f.consequent()));
}

Proof iff_intro(const Proof& ab, const Proof& ba) {
  // x -> (y -> ~(x -> ~y)) with x = a -> b, y = b -> a
  const Formula& x = ab.conclusion();
  const Formula& y = ba.conclusion();
  Formula x_ny = imp(x, neg(y));
  HProof ny = hmp(hyp(x), hyp(x_ny));
  HProof lemma = deduce(x_ny, ny);                                // (x -> ~y) -> ~y
  HProof c = hmp(lemma, contrapose_lemma(x_ny, neg(y)));           // ~~y -> ~(x -> ~y)
  HProof r = hmp(hmp(hyp(y), dneg_intro(y)), c);
  Proof conj_intro = discharge(r, {x, y});
  return mp(ba, mp(ab, conj_intro));
}

Proof iff_forward(const Proof& iff_ab) {
  // ~(x -> ~y) -> x
  const Formula& inner = iff_ab.conclusion().body();
  const Formula& x = inner.antecedent();
  const Formula& ny = inner.consequent();
  Proof e = explode(x, ny);                        // ~x -> (x -> ~y)
  Proof c = contrapose(e);                         // ~(x -> ~y) -> ~~x
  return mp(mp(iff_ab, c), dneg_elim(x));
}

Proof iff_backward(const Proof& iff_ab) {
  // ~(x -> ~y) -> y
  const Formula& inner = iff_ab.conclusion().body();
  const Formula& x = inner.antecedent();
  const Formula& y = inner.consequent().body();
  Proof w = prop1(neg(y), x);                      // ~y -> (x -> ~y)
  Proof c = contrapose(w);                         // ~(x -> ~y) -> ~~y
  return mp(mp(iff_ab, c), dneg_elim(y));
}

Proof compose_left(const Proof& xy, const Formula& z) {
  const Formula& x = xy.conclusion().antecedent();
  const Formula& y = xy.conclusion().consequent();
  Formula yz = imp(y, z);
  HProof r = hmp(hmp(hyp(x), xy), hyp(yz));
  return discharge(r, {yz, x});
}

Proof compose_right(const Proof& yz, const Formula& x) {
  Formula xy = imp(x, yz.conclusion().antecedent());
  HProof r = hmp(hmp(hyp(x), hyp(xy)), yz);
  return discharge(r, {xy, x});
}

Proof weaken(const Proof& b, const Formula& a) { return mp(b, prop1(b.conclusion(), a)); }

Proof discharge_middle(const Proof& abc, const Proof& b) {
  const Formula& a = abc.conclusion().antecedent();
  HProof r = hmp(thm(b), hmp(hyp(a), abc));
  return discharge(r, {a});
}

Proof map_consequent(const Proof& p, std::size_t depth, const Proof& zw) {
  if (depth == 0) return mp(p, zw);
  if (depth == 1) return hypothetical_syllogism(p, zw);
  // Lift zw one level: (x_d -> z) -> (x_d -> w), then recurse.
  const Formula* f = &p.conclusion();
  for (std::size_t i = 0; i + 1 < depth; ++i) f = &f->consequent();
  const Formula& xd = f->antecedent();
  Formula xz = imp(xd, zw.conclusion().antecedent());
  HProof r = hmp(hmp(hyp(xd), hyp(xz)), zw);
  Proof lifted = discharge(r, {xz, xd});
  return map_consequent(p, depth - 1, lifted);
}

}  // namespace tk
