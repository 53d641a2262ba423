#pragma once

#include <unordered_map>
#include <vector>

#include "blowup/ideal.hpp"
#include "blowup/linalg.hpp"

namespace blowup {

/// The finite-dimensional algebra R/Q for an m-primary Q, with coordinates
/// on standard monomials. Ideals containing Q become subspaces, and colons
/// become kernels of multiplication maps.
class QuotientFrame {
 public:
  explicit QuotientFrame(Ideal Q, bool enumerate = true) : Q_(std::move(Q)) {
    if (Q_.backend() == Ideal::Backend::semigroup_linear)
      fail_hypothesis("quotient frames need a monomial or Groebner presentation");
    if (!enumerate) return;
    switch (Q_.backend()) {
      case Ideal::Backend::monomial:
        for (const auto& m : Q_.monomial_form().standard_monomials()) index_of(m);
        break;
      case Ideal::Backend::semigroup:
        for (unsigned e : Q_.semigroup_form().standard_exponents()) index_of(Monomial{e});
        break;
      default:
        if (!is_m_primary(Q_)) fail_hypothesis("quotient frame of an ideal that is not m-primary");
        for (const auto& m : Q_.basis().leading_ideal().standard_monomials()) index_of(m);
        break;
    }
    dim_ = monomials_.size();
    enumerated_ = true;
  }

  const Ideal& modulus() const noexcept { return Q_; }
  std::size_t dimension() const {
    require_basis();
    return dim_;
  }
  const std::vector<Monomial>& basis() const {
    require_basis();
    return monomials_;
  }

  Polynomial normal_form(const Polynomial& f) const {
    switch (Q_.backend()) {
      case Ideal::Backend::monomial: {
        std::vector<Term> keep;
        for (const auto& t : f.terms())
          if (!Q_.monomial_form().contains(t.monomial)) keep.push_back(t);
        return Polynomial(f.nvars(), std::move(keep));
      }
      case Ideal::Backend::semigroup: {
        std::vector<Term> keep;
        for (const auto& t : f.terms())
          if (!Q_.semigroup_form().contains(t.monomial[0])) keep.push_back(t);
        return Polynomial(f.nvars(), std::move(keep));
      }
      default: return Q_.basis().normal_form(f);
    }
  }

  SparseVector coords(const Polynomial& f) {
    SparseVector v;
    const Polynomial h = normal_form(f);
    for (const auto& t : h.terms()) v.emplace_back(index_of(t.monomial), t.coefficient);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  Polynomial lift(const SparseVector& v) const {
    std::vector<Term> t;
    for (const auto& [i, c] : v) t.push_back({monomials_[i], c});
    return Polynomial(Q_.nvars(), std::move(t));
  }

  /// ((gens) + Q) / Q as a subspace.
  Echelon ideal_span(const std::vector<Polynomial>& gens) {
    require_basis();
    Echelon e;
    for (const auto& g : gens)
      for (std::size_t i = 0; i < dim_; ++i) e.insert(coords(g.times(monomials_[i])));
    return e;
  }

  /// { v : b*v in A for every b in by }, with A a subspace representing an ideal containing Q.
  Echelon colon(const Echelon& A, const std::vector<Polynomial>& by) {
    require_basis();
    std::vector<SparseVector> images(dim_);
    for (std::size_t j = 0; j < by.size(); ++j) {
      const auto shift = static_cast<std::uint32_t>(j * dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        SparseVector r = A.reduce(coords(by[j].times(monomials_[i])));
        for (auto& e : r) e.first += shift;
        images[i].insert(images[i].end(), r.begin(), r.end());
      }
    }
    Echelon out;
    for (auto& k : kernel(images)) out.insert(k);
    return out;
  }

  /// One row per basis element e_i: the concatenation of b_j * e_i over j.
  std::vector<SparseVector> multiplication_rows(const std::vector<Polynomial>& by) {
    require_basis();
    std::vector<SparseVector> rows(dim_);
    for (std::size_t j = 0; j < by.size(); ++j) {
      const auto shift = static_cast<std::uint32_t>(j * dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        SparseVector r = coords(by[j].times(monomials_[i]));
        for (auto& e : r) e.first += shift;
        rows[i].insert(rows[i].end(), r.begin(), r.end());
      }
    }
    return rows;
  }

  /// dim of { v : b*v = 0 in R/Q for all b in by }. `floor` is a known lower
  /// bound; when the rank mod p already meets it the rational computation is skipped.
  std::size_t kernel_dimension(const std::vector<Polynomial>& by, std::size_t floor = 0) {
    const auto rows = multiplication_rows(by);
    ModEchelon mod;
    for (const auto& r : rows) mod.insert(r);
    if (mod.ok() && dim_ - mod.rank() <= floor) return dim_ - mod.rank();
    Echelon e;
    for (const auto& r : rows) e.insert(r);
    return dim_ - e.rank();
  }

  /// Dimension of the kernel of multiplication by f on R/Q, i.e. λ((Q : f)/Q).
  std::size_t annihilator_dimension(const Polynomial& f) { return colon(Echelon{}, {f}).rank(); }

  std::vector<Polynomial> lift_rows(const Echelon& e) const {
    std::vector<Polynomial> out;
    for (const auto& [p, row] : e.rows()) out.push_back(lift(row));
    return out;
  }

  /// The ideal Q + (lifted subspace).
  Ideal to_ideal(const Echelon& e) const {
    std::vector<Polynomial> g = Q_.generators();
    for (auto& p : lift_rows(e)) g.push_back(std::move(p));
    return Ideal(Q_.ring(), std::move(g));
  }

 private:
  void require_basis() const {
    if (!enumerated_) fail_hypothesis("quotient frame was built without a basis");
  }
  std::uint32_t index_of(const Monomial& m) {
    auto [it, inserted] = index_.try_emplace(m, static_cast<std::uint32_t>(monomials_.size()));
    if (inserted) monomials_.push_back(m);
    return it->second;
  }

  Ideal Q_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
  std::vector<Monomial> monomials_;
  std::size_t dim_ = 0;
  bool enumerated_ = false;
};

}  // namespace blowup
