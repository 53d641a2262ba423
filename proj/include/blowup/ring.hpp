#pragma once

#include <memory>
#include <string>
#include <vector>

#include "blowup/groebner.hpp"
#include "blowup/semigroup.hpp"

namespace blowup {

/// Hypotheses a caller may assert for a quotient model. Polynomial and
/// semigroup rings get Cohen-Macaulay automatically.
struct RingFlags {
  bool cohen_macaulay = false;
  bool gorenstein = false;
  bool buchsbaum = false;
  friend bool operator==(const RingFlags&, const RingFlags&) = default;
};

class RingSpec;
using Ring = std::shared_ptr<const RingSpec>;

class RingSpec {
 public:
  enum class Model { polynomial, semigroup, quotient };

  static Ring polynomial(std::vector<std::string> vars, RingFlags asserted = {}) {
    check_vars(vars);
    auto r = std::shared_ptr<RingSpec>(new RingSpec);
    r->model_ = Model::polynomial;
    r->vars_ = std::move(vars);
    r->asserted_ = asserted;
    r->flags_ = asserted;
    r->flags_.cohen_macaulay = r->flags_.gorenstein = true;
    r->relation_basis_ = GroebnerBasis(r->vars_.size(), MonomialOrder::degrevlex(), {});
    r->dimension_ = r->vars_.size();
    return r;
  }

  static Ring semigroup(std::vector<unsigned> gens, RingFlags asserted = {}) {
    auto r = std::shared_ptr<RingSpec>(new RingSpec);
    r->model_ = Model::semigroup;
    r->vars_ = {"t"};
    r->semigroup_ = std::make_shared<NumericalSemigroup>(std::move(gens));
    r->asserted_ = asserted;
    r->flags_ = asserted;
    r->flags_.cohen_macaulay = true;
    r->dimension_ = 1;
    return r;
  }

  static Ring quotient(std::vector<std::string> vars, std::vector<Polynomial> relations, RingFlags asserted = {}) {
    check_vars(vars);
    for (const auto& f : relations)
      if (f.nvars() != vars.size()) fail_input("relation does not match the declared variables");
    auto r = std::shared_ptr<RingSpec>(new RingSpec);
    r->model_ = Model::quotient;
    r->vars_ = std::move(vars);
    r->relations_ = std::move(relations);
    r->asserted_ = asserted;
    r->flags_ = asserted;
    if (r->flags_.gorenstein) r->flags_.cohen_macaulay = true;
    r->relation_basis_ = GroebnerBasis(r->vars_.size(), MonomialOrder::degrevlex(), r->relations_);
    if (r->relation_basis_.is_unit()) fail_input("relations generate the unit ideal");
    for (const auto& f : r->relations_)
      if (f.constant_term() != 0) fail_input("relations must vanish at the origin");
    r->dimension_ = r->relation_basis_.krull_dimension();
    return r;
  }

  Model model() const noexcept { return model_; }
  bool is_polynomial() const noexcept { return model_ == Model::polynomial; }
  bool is_semigroup() const noexcept { return model_ == Model::semigroup; }
  bool is_quotient() const noexcept { return model_ == Model::quotient; }

  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  const GroebnerBasis& relation_basis() const noexcept { return relation_basis_; }
  const std::shared_ptr<const NumericalSemigroup>& numerical_semigroup() const noexcept { return semigroup_; }

  /// Effective hypotheses (asserted plus automatic).
  const RingFlags& flags() const noexcept { return flags_; }
  const RingFlags& asserted() const noexcept { return asserted_; }
  std::size_t dimension() const noexcept { return dimension_; }

  std::string describe() const {
    std::string s;
    switch (model_) {
      case Model::polynomial: s = "poly("; break;
      case Model::semigroup: s = "semigroup("; break;
      case Model::quotient: s = "quotient("; break;
    }
    if (is_semigroup()) {
      const auto& g = semigroup_->declared_generators();
      for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
    } else {
      for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
      if (is_quotient()) {
        s += "; ";
        for (std::size_t i = 0; i < relations_.size(); ++i)
          s += (i ? ", " : "") + to_string(relations_[i], vars_);
      }
    }
    return s + ")";
  }

  Polynomial variable(std::size_t i) const { return Polynomial::variable(nvars(), i); }

 private:
  RingSpec() = default;

  static void check_vars(const std::vector<std::string>& vars) {
    if (vars.empty()) fail_input("a ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j]) fail_input("duplicate variable " + vars[i]);
  }

  Model model_ = Model::polynomial;
  std::vector<std::string> vars_;
  std::vector<Polynomial> relations_;
  GroebnerBasis relation_basis_;
  std::shared_ptr<const NumericalSemigroup> semigroup_;
  RingFlags asserted_, flags_;
  std::size_t dimension_ = 0;
};

/// Dimension of the model ring.
inline std::size_t krull_dimension(const RingSpec& ring) { return ring.dimension(); }

}  // namespace blowup
