#include "truthkernel/arithmetization.hpp"

#include <mutex>
#include <unordered_map>

namespace tk {

namespace {

enum Tag : unsigned char {
  kVar = 0x01,
  kSucc = 0x03,
  kAdd = 0x04,
  kMul = 0x05,
  kIter = 0x06,
  kSub = 0x07,
  kNum = 0x08,
  kEq = 0x10,
  kTr = 0x11,
  kNot = 0x12,
  kImp = 0x13,
  kForall = 0x14,
};

using Bytes = std::vector<unsigned char>;

void put_varint(Bytes& out, std::uint64_t v) {
  do {
    unsigned char b = v & 0x7f;
    v >>= 7;
    if (v) b |= 0x80;
    out.push_back(b);
  } while (v);
}

Bytes nat_bytes(const Nat& n) {
  if (n == 0) return {};
  std::size_t count = (mpz_sizeinbase(n.get_mpz_t(), 2) + 7) / 8;
  Bytes out(count);
  std::size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, n.get_mpz_t());
  out.resize(written);
  return out;
}

Nat bytes_nat(const unsigned char* p, std::size_t len) {
  Nat n;
  if (len) mpz_import(n.get_mpz_t(), len, 1, 1, 1, 0, p);
  return n;
}

void write(Bytes& out, const Term& t) {
  if (const Nat* n = t.numeral_value()) {
    out.push_back(kNum);
    Bytes b = nat_bytes(*n);
    put_varint(out, b.size());
    out.insert(out.end(), b.begin(), b.end());
    return;
  }
  switch (t.kind()) {
    case Term::Kind::Var:
      out.push_back(kVar);
      put_varint(out, t.var_index());
      return;
    case Term::Kind::Zero: return;  // canonical, handled above
    case Term::Kind::Succ: out.push_back(kSucc); break;
    case Term::Kind::Add: out.push_back(kAdd); break;
    case Term::Kind::Mul: out.push_back(kMul); break;
    case Term::Kind::App: out.push_back(t.symbol() == FnSymbol::Iter ? kIter : kSub); break;
  }
  for (const Term& a : t.args()) write(out, a);
}

void write(Bytes& out, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: out.push_back(kEq); break;
    case K::Tr: out.push_back(kTr); break;
    case K::Not: out.push_back(kNot); break;
    case K::Imp: out.push_back(kImp); break;
    case K::Forall:
      out.push_back(kForall);
      put_varint(out, f.bound_var());
      break;
  }
  for (const Term& t : f.terms()) write(out, t);
  for (const Formula& c : f.children()) write(out, c);
}

class Reader {
 public:
  explicit Reader(const Bytes& b) : b_(b) {}

  bool done() const { return pos_ == b_.size(); }

  unsigned char peek() const {
    if (pos_ >= b_.size()) throw DecodeError("code truncated");
    return b_[pos_];
  }

  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      unsigned char b = peek();
      ++pos_;
      v |= std::uint64_t(b & 0x7f) << shift;
      if (!(b & 0x80)) return v;
    }
    throw DecodeError("malformed length field");
  }

  Term term() {
    unsigned char tag = peek();
    ++pos_;
    switch (tag) {
      case kNum: {
        std::uint64_t len = varint();
        if (len > b_.size() - pos_) throw DecodeError("code truncated");
        Nat n = bytes_nat(b_.data() + pos_, len);
        pos_ += len;
        return numeral(n);
      }
      case kVar: {
        std::uint64_t v = varint();
        if (v > 0xffffffffu) throw DecodeError("variable index out of range");
        return Term::var(static_cast<VarId>(v));
      }
      case kSucc: return Term::succ(term());
      case kAdd: {
        Term a = term();
        return Term::add(a, term());
      }
      case kMul: {
        Term a = term();
        return Term::mul(a, term());
      }
      case kIter: {
        Term a = term();
        return Term::app(FnSymbol::Iter, {a, term()});
      }
      case kSub: {
        Term a = term();
        Term b = term();
        return Term::app(FnSymbol::Sub, {a, b, term()});
      }
      default: throw DecodeError("unexpected tag " + std::to_string(tag) + " in term position");
    }
  }

  Formula formula() {
    unsigned char tag = peek();
    ++pos_;
    switch (tag) {
      case kEq: {
        Term a = term();
        return Formula::eq(a, term());
      }
      case kTr: return Formula::tr(term());
      case kNot: return Formula::neg(formula());
      case kImp: {
        Formula a = formula();
        return Formula::imp(a, formula());
      }
      case kForall: {
        std::uint64_t v = varint();
        if (v > 0xffffffffu) throw DecodeError("variable index out of range");
        return Formula::forall(static_cast<VarId>(v), formula());
      }
      default: throw DecodeError("unexpected tag " + std::to_string(tag) + " in formula position");
    }
  }

 private:
  const Bytes& b_;
  std::size_t pos_ = 0;
};

// Names are requested repeatedly for the same few codes while tactics run.
class NumeralCache {
 public:
  Term get(const Nat& n) {
    std::string key = n.get_str(16);
    {
      std::lock_guard lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    Term t = build(n);
    std::lock_guard lock(mu_);
    if (map_.size() > 4096) map_.clear();
    map_.emplace(std::move(key), t);
    return t;
  }

 private:
  static Term build(const Nat& n) {
    static const Term two = Term::succ(Term::succ(Term::zero()));
    if (n == 0) return Term::zero();
    if (n == 1) return Term::succ(Term::zero());
    // Bits from most to least significant; the leading 1 is numeral(1).
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Term acc = Term::succ(Term::zero());
    for (std::size_t i = bits - 1; i-- > 0;) {
      acc = Term::mul(two, acc);
      if (mpz_tstbit(n.get_mpz_t(), i)) acc = Term::succ(acc);
    }
    return acc;
  }

  std::mutex mu_;
  std::unordered_map<std::string, Term> map_;
};

NumeralCache& numeral_cache() {
  static NumeralCache cache;
  return cache;
}

}  // namespace

Term numeral(const Nat& n) {
  if (n < 0) throw std::invalid_argument("numeral of a negative number");
  if (n < 2) return n == 0 ? Term::zero() : Term::succ(Term::zero());
  return numeral_cache().get(n);
}

Nat evaluate(const Term& t) {
  if (const Nat* n = t.numeral_value()) return *n;
  switch (t.kind()) {
    case Term::Kind::Var:
      throw std::invalid_argument("cannot evaluate open term: free variable " + var_name(t.var_index()));
    case Term::Kind::Zero: return 0;
    case Term::Kind::Succ: return evaluate(t.args()[0]) + 1;
    case Term::Kind::Add: return evaluate(t.args()[0]) + evaluate(t.args()[1]);
    case Term::Kind::Mul: return evaluate(t.args()[0]) * evaluate(t.args()[1]);
    case Term::Kind::App:
      if (t.symbol() == FnSymbol::Iter) return iter_fn(evaluate(t.args()[0]), evaluate(t.args()[1]));
      {
        Nat v = evaluate(t.args()[1]);
        if (!v.fits_uint_p() || v > 0xffffffffu) throw std::invalid_argument("sub: variable index out of range");
        return sub_fn(evaluate(t.args()[0]), static_cast<VarId>(v.get_ui()), evaluate(t.args()[2]));
      }
  }
  return 0;
}

std::vector<unsigned char> serialize(const Term& t) {
  Bytes out;
  write(out, t);
  return out;
}

std::vector<unsigned char> serialize(const Formula& f) {
  Bytes out;
  write(out, f);
  return out;
}

Nat encode(const Term& t) {
  Bytes b = serialize(t);
  return bytes_nat(b.data(), b.size());
}

Nat encode(const Formula& f) {
  Bytes b = serialize(f);
  return bytes_nat(b.data(), b.size());
}

Nat encode(const Expr& e) {
  return std::visit([](const auto& x) { return encode(x); }, e);
}

Expr decode(const Nat& code) {
  if (code <= 0) throw DecodeError("not a code: " + code.get_str());
  Bytes b = nat_bytes(code);
  Reader r(b);
  unsigned char tag = r.peek();
  Expr e = tag >= kEq ? Expr(r.formula()) : Expr(r.term());
  if (!r.done()) throw DecodeError("trailing bytes after expression");
  // Only serializations produced by encode are codes (e.g. S(0) written
  // structurally instead of as a numeral is rejected).
  Bytes again = std::visit([](const auto& x) { return serialize(x); }, e);
  if (again != b) throw DecodeError("not in the image of encode (non-canonical serialization)");
  return e;
}

Formula decode_formula(const Nat& code) {
  Expr e = decode(code);
  if (!std::holds_alternative<Formula>(e)) throw DecodeError("code " + code.get_str() + " denotes a term, not a formula");
  return std::get<Formula>(e);
}

Term name_of(const Formula& f) { return numeral(encode(f)); }
Term name_of(const Term& t) { return numeral(encode(t)); }

Nat sub_fn(const Nat& c, VarId v, const Nat& n) {
  Formula f = decode_formula(c);
  return encode(substitute(f, v, numeral(n)));
}

const Formula& iter_step_template() {
  static const Formula k = Formula::tr(Term::app(FnSymbol::Iter, {Term::var(kVarY), Term::var(kVarZ)}));
  return k;
}

const Nat& iter_step_code() {
  static const Nat c = encode(iter_step_template());
  return c;
}

Nat iter_fn(const Nat& n, const Nat& c) {
  if (n < 0 || c < 0) throw std::invalid_argument("iter_fn: negative argument");
  if (n == 0) return c;
  return sub_fn(sub_fn(iter_step_code(), kVarZ, c), kVarY, n - 1);
}

Formula omega_truth(const Term& t) {
  VarId y = contains(t.free_vars(), kVarY) ? fresh_var(t.free_vars()) : kVarY;
  return Formula::forall(y, Formula::tr(Term::app(FnSymbol::Iter, {Term::var(y), t})));
}

Term dot_term(const Formula& f, VarId v, VarId x) {
  return Term::app(FnSymbol::Sub, {name_of(f), numeral(Nat(v)), Term::var(x)});
}

Term self_substitution(VarId v) {
  return Term::app(FnSymbol::Sub, {Term::var(v), numeral(Nat(v)), Term::var(v)});
}

DiagonalSentence diagonal_sentence(const Formula& f, VarId v) {
  for (VarId w : f.free_vars())
    if (w != v)
      throw std::invalid_argument("diagonal: formula has free variable " + var_name(w) + " besides " + var_name(v));
  Formula theta = substitute(f, v, self_substitution(v));
  Term name = name_of(theta);
  Formula gamma = substitute(theta, v, name);
  Term self_ref = substitute(self_substitution(v), v, name);
  return {theta, gamma, self_ref};
}

}  // namespace tk
