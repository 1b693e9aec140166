#include "cadform/formula.hpp"

#include <algorithm>

namespace cadform {

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Lt: return "<";
    case Relation::Gt: return ">";
    case Relation::Le: return "<=";
    case Relation::Ge: return ">=";
  }
  return "?";
}

Relation negate(Relation rel) {
  switch (rel) {
    case Relation::Eq: return Relation::Ne;
    case Relation::Ne: return Relation::Eq;
    case Relation::Lt: return Relation::Ge;
    case Relation::Gt: return Relation::Le;
    case Relation::Le: return Relation::Gt;
    case Relation::Ge: return Relation::Lt;
  }
  return rel;
}

Relation mirror(Relation rel) {
  switch (rel) {
    case Relation::Lt: return Relation::Gt;
    case Relation::Gt: return Relation::Lt;
    case Relation::Le: return Relation::Ge;
    case Relation::Ge: return Relation::Le;
    default: return rel;
  }
}

bool holds(Relation rel, int sign) {
  switch (rel) {
    case Relation::Eq: return sign == 0;
    case Relation::Ne: return sign != 0;
    case Relation::Lt: return sign < 0;
    case Relation::Gt: return sign > 0;
    case Relation::Le: return sign <= 0;
    case Relation::Ge: return sign >= 0;
  }
  return false;
}

Atom Atom::normalized() const {
  Rational k = normalization_factor(poly);
  return {normalize(poly), k < 0 ? mirror(rel) : rel};
}

std::string Atom::to_string(const VariableOrder& order) const {
  return poly.to_string(order) + " " + std::string(cadform::to_string(rel)) + " 0";
}

Formula Formula::constant(bool value) {
  Formula f;
  f.kind_ = value ? Kind::True : Kind::False;
  return f;
}

Formula Formula::atom(Atom a) {
  if (a.poly.is_constant()) return constant(holds(a.rel, sgn(a.poly.constant_value())));
  Formula f;
  f.kind_ = Kind::Atom;
  f.atom_ = std::move(a);
  return f;
}

Formula Formula::conjunction(std::vector<Formula> children) {
  if (children.empty()) return constant(true);
  if (children.size() == 1) return std::move(children.front());
  Formula f;
  f.kind_ = Kind::And;
  f.children_ = std::move(children);
  return f;
}

Formula Formula::disjunction(std::vector<Formula> children) {
  if (children.empty()) return constant(false);
  if (children.size() == 1) return std::move(children.front());
  Formula f;
  f.kind_ = Kind::Or;
  f.children_ = std::move(children);
  return f;
}

Formula Formula::negation(Formula child) {
  Formula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(child));
  return f;
}

namespace {

Formula nnf_of(const Formula& f, bool negated) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return Formula::constant(!negated);
    case K::False: return Formula::constant(negated);
    case K::Atom: {
      Atom a = f.atom();
      if (negated) a.rel = negate(a.rel);
      return Formula::atom(std::move(a));
    }
    case K::Not: return nnf_of(f.children().front(), !negated);
    case K::And:
    case K::Or: {
      bool conj = (f.kind() == K::And) != negated;
      std::vector<Formula> kids;
      for (const auto& c : f.children()) {
        Formula n = nnf_of(c, negated);
        // Absorbing and neutral constants.
        if (n.kind() == (conj ? K::False : K::True)) return n;
        if (n.kind() == (conj ? K::True : K::False)) continue;
        if (n.kind() == (conj ? K::And : K::Or)) {
          kids.insert(kids.end(), n.children().begin(), n.children().end());
        } else {
          kids.push_back(std::move(n));
        }
      }
      return conj ? Formula::conjunction(std::move(kids)) : Formula::disjunction(std::move(kids));
    }
  }
  return f;
}

void collect_atoms(const Formula& f, std::vector<Atom>& out) {
  if (f.kind() == Formula::Kind::Atom) out.push_back(f.atom());
  for (const auto& c : f.children()) collect_atoms(c, out);
}

std::string child_text(const Formula& c, const VariableOrder& order) {
  bool compound = c.kind() == Formula::Kind::And || c.kind() == Formula::Kind::Or;
  return compound ? "(" + c.to_string(order) + ")" : c.to_string(order);
}

void add_unique(std::vector<Atom>& atoms, const Atom& a) {
  if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
}

}  // namespace

Formula Formula::nnf() const { return nnf_of(*this, false); }

std::vector<Atom> Formula::atoms() const {
  std::vector<Atom> out;
  collect_atoms(*this, out);
  return out;
}

bool Formula::evaluate(const std::function<int(const Polynomial&)>& sign) const {
  switch (kind_) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return holds(atom_->rel, sign(atom_->poly));
    case Kind::Not: return !children_.front().evaluate(sign);
    case Kind::And:
      return std::all_of(children_.begin(), children_.end(), [&](const Formula& c) { return c.evaluate(sign); });
    case Kind::Or:
      return std::any_of(children_.begin(), children_.end(), [&](const Formula& c) { return c.evaluate(sign); });
  }
  return false;
}

std::string Formula::to_string(const VariableOrder& order) const {
  switch (kind_) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Atom: return atom_->to_string(order);
    case Kind::Not: return "~(" + children_.front().to_string(order) + ")";
    case Kind::And:
    case Kind::Or: {
      std::string sep = kind_ == Kind::And ? " /\\ " : " \\/ ";
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) out += sep;
        out += child_text(children_[i], order);
      }
      return out;
    }
  }
  return "";
}

std::vector<std::size_t> Qff::equation_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < conjuncts.size(); ++i) {
    if (conjuncts[i].is_equation()) out.push_back(i);
  }
  return out;
}

std::vector<Polynomial> Qff::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& a : conjuncts) out.push_back(a.poly);
  return out;
}

bool Qff::evaluate(const std::function<int(const Polynomial&)>& sign) const {
  return std::all_of(conjuncts.begin(), conjuncts.end(), [&](const Atom& a) { return holds(a.rel, sign(a.poly)); });
}

std::string Qff::to_string(const VariableOrder& order) const {
  if (conjuncts.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < conjuncts.size(); ++i) {
    if (i > 0) out += " /\\ ";
    if (designated_ec == i) out += "*";
    out += conjuncts[i].to_string(order);
  }
  return out;
}

std::vector<Qff> to_dnf(const Formula& f) {
  Formula n = f.nnf();
  using K = Formula::Kind;
  std::vector<Qff> out;
  switch (n.kind()) {
    case K::True: out.push_back({}); break;
    case K::False: break;
    case K::Atom: out.push_back({{n.atom()}, {}}); break;
    case K::Or:
      for (const auto& c : n.children()) {
        for (auto& q : to_dnf(c)) {
          if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
        }
      }
      break;
    case K::And: {
      out.push_back({});
      for (const auto& c : n.children()) {
        std::vector<Qff> next;
        for (const auto& left : out) {
          for (const auto& right : to_dnf(c)) {
            Qff q = left;
            for (const auto& a : right.conjuncts) add_unique(q.conjuncts, a);
            if (std::find(next.begin(), next.end(), q) == next.end()) next.push_back(std::move(q));
          }
        }
        out = std::move(next);
      }
      break;
    }
    case K::Not: break;  // unreachable after nnf
  }
  return out;
}

Formula from_dnf(const std::vector<Qff>& clauses) {
  std::vector<Formula> ds;
  for (const auto& q : clauses) {
    std::vector<Formula> cs;
    for (const auto& a : q.conjuncts) cs.push_back(Formula::atom(a));
    ds.push_back(Formula::conjunction(std::move(cs)));
  }
  return Formula::disjunction(std::move(ds));
}

Formula remap(const Formula& f, const VariableOrder& from, const VariableOrder& to) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False: return f;
    case K::Atom: return Formula::atom({remap(f.atom().poly, from, to), f.atom().rel});
    case K::Not: return Formula::negation(remap(f.children().front(), from, to));
    case K::And:
    case K::Or: {
      std::vector<Formula> kids;
      for (const auto& c : f.children()) kids.push_back(remap(c, from, to));
      return f.kind() == K::And ? Formula::conjunction(std::move(kids)) : Formula::disjunction(std::move(kids));
    }
  }
  return f;
}

Qff remap(const Qff& q, const VariableOrder& from, const VariableOrder& to) {
  Qff out{{}, q.designated_ec};
  for (const auto& a : q.conjuncts) out.conjuncts.push_back({remap(a.poly, from, to), a.rel});
  return out;
}

}  // namespace cadform
