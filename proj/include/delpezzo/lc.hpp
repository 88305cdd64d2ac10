#pragma once

#include "surface.hpp"
#include "curves.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace delpezzo {

// A boundary term is either a curve of D(Y) (by id, visible to annotations)
// or an extra class assumed to be a general member of its linear system.
struct BoundaryTerm {
  std::variant<int, Vec> support;
  Rat coeff;
};

struct BoundaryDivisor {
  std::vector<BoundaryTerm> terms;

  Rat coefficient_sum() const {
    Rat s(0);
    for (auto& t : terms) s += t.coeff;
    return s;
  }
};

struct LcResult {
  bool lc;
  std::string witness;  // offending exceptional when not lc
};

namespace detail {

// Coefficient linear in a threshold parameter t: c0 + c1*t.
struct LinT {
  Rat c0{0}, c1{0};
  LinT operator+(const LinT& o) const { return {c0 + o.c0, c1 + o.c1}; }
  LinT operator-(const Rat& r) const { return {c0 - r, c1}; }
  LinT scaled(std::int64_t m) const { return {c0 * Rat(m), c1 * Rat(m)}; }
};

struct Constraint {
  LinT value;  // exceptional coefficient; log-canonical needs value <= 1
  std::string where;
};

// Formal resolution of one annotated point. Each blow-up contributes the
// exceptional coefficient e = sum d_i*m_i - 1; declared contacts keep pairs
// together through further blow-ups until the contact order is spent.
inline void resolve_point(const std::vector<std::pair<LinT, int>>& members,
                          const std::vector<std::array<int, 3>>& contacts,
                          const std::map<int, LinT>& coeff_of,
                          const std::string& label, int depth,
                          std::vector<Constraint>& out) {
  if (depth > 16) throw SpecError("lc: annotation recursion too deep");
  LinT e{Rat(-1), Rat(0)};
  for (auto& [c, m] : members) e = e + c.scaled(m);
  out.push_back({e, label});
  for (auto& c : contacts) {
    LinT da = coeff_of.count(c[0]) ? coeff_of.at(c[0]) : LinT{};
    LinT db = coeff_of.count(c[1]) ? coeff_of.at(c[1]) : LinT{};
    int k = c[2];
    // After the blow-up the two branches meet the new exceptional in one
    // point; contact drops by one, order 1 means a transverse triple there.
    std::vector<std::pair<LinT, int>> next = {{da, 1}, {db, 1}, {e, 1}};
    std::vector<std::array<int, 3>> ncont;
    if (k - 1 >= 2) ncont.push_back({c[0], c[1], k - 1});
    resolve_point(next, ncont, coeff_of, label + "'", depth + 1, out);
  }
}

inline std::vector<Constraint> lc_constraints(const SurfaceSpec& spec,
                                              const std::map<int, LinT>& coeff_of) {
  std::vector<Constraint> out;
  std::map<int, LinT> exceptional_at;  // point id -> first blow-up coefficient
  // Parentless points first so infinitely-near chains see their exceptional.
  auto process = [&](const IncidenceAnnotation& ann) {
    std::vector<std::pair<LinT, int>> members;
    for (auto& [id, m] : ann.members) {
      LinT c = coeff_of.count(id) ? coeff_of.at(id) : LinT{};
      members.push_back({c, m});
    }
    if (ann.parent) {
      auto it = exceptional_at.find(*ann.parent);
      if (it == exceptional_at.end())
        throw SpecError("lc: annotation parent point not found or out of order");
      members.push_back({it->second, 1});
    }
    LinT e{Rat(-1), Rat(0)};
    for (auto& [c, m] : members) e = e + c.scaled(m);
    exceptional_at[ann.point_id] = e;
    resolve_point(members, ann.contact, coeff_of,
                  "p" + std::to_string(ann.point_id), 0, out);
  };
  for (auto& ann : spec.annotations)
    if (!ann.parent) process(ann);
  for (auto& ann : spec.annotations)
    if (ann.parent) process(ann);
  return out;
}

}  // namespace detail

inline LcResult lc_check(const SurfaceSpec& spec, const BoundaryDivisor& D) {
  validate_spec(spec);
  std::map<int, detail::LinT> coeff_of;
  for (auto& t : D.terms) {
    if (t.coeff <= Rat(0) || t.coeff > Rat(1))
      throw SpecError("boundary coefficient outside (0,1]: " + to_string(t.coeff));
    if (std::holds_alternative<int>(t.support)) {
      int id = std::get<int>(t.support);
      auto [it, fresh] = coeff_of.insert({id, {t.coeff, Rat(0)}});
      if (!fresh) it->second.c0 += t.coeff;
    }
    // Extra classes are general members: snc against everything, coefficient
    // <= 1 suffices.
  }
  for (auto& c : detail::lc_constraints(spec, coeff_of))
    if (c.value.c0 > Rat(1))
      return {false, "discrepancy over " + c.where + ": exceptional coefficient " +
                         to_string(c.value.c0)};
  return {true, ""};
}

// Largest t <= 1 such that t * support is log-canonical; support coefficients
// act as multiplicities of t. Solved symbolically: every blow-up constraint
// is linear in t.
inline Rat lct_pair(const SurfaceSpec& spec, const BoundaryDivisor& support) {
  validate_spec(spec);
  std::map<int, detail::LinT> coeff_of;
  Rat best(1);
  for (auto& t : support.terms) {
    if (t.coeff <= Rat(0) || t.coeff > Rat(1))
      throw SpecError("support coefficient outside (0,1]: " + to_string(t.coeff));
    if (std::holds_alternative<int>(t.support)) {
      int id = std::get<int>(t.support);
      auto [it, fresh] = coeff_of.insert({id, {Rat(0), t.coeff}});
      if (!fresh) it->second.c1 += t.coeff;
    }
  }
  for (auto& [id, c] : coeff_of)
    if (c.c1 > Rat(0)) best = std::min(best, Rat(1) / c.c1);
  for (auto& c : detail::lc_constraints(spec, coeff_of)) {
    if (c.value.c1 > Rat(0))
      best = std::min(best, (Rat(1) - c.value.c0) / c.value.c1);
    else if (c.value.c0 > Rat(1))
      throw SpecError("lct: constant constraint already violated");
  }
  return best;
}

}  // namespace delpezzo
