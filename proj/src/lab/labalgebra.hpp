#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "../rootsystem.hpp"

namespace sw::lab {

// Sparse algebra element: combination of basis elements.
using AlgCombo = std::vector<std::pair<size_t, Rat>>;

struct LabGen {
    std::string name;
    Weight weight;           // ambient weight (zero for Cartan elements)
    bool odd = false;
    std::vector<Rat> cartan_vec;  // lambda(h) = sum lambda_k * cartan_vec[k]; empty unless Cartan
};

class LabAlgebra;
using LabAlgebraPtr = std::shared_ptr<const LabAlgebra>;

// Small catalog of explicitly realized algebras with exact structure
// constants: sl2, sl3, gl11, gl21, sl21, w2. Matrix models for the gl/sl
// families; the superderivation model on the Grassmann algebra for W(2).
class LabAlgebra {
  public:
    static LabAlgebraPtr make(const std::string& name);
    static std::vector<std::string> catalog();

    const std::string& name() const { return name_; }
    const RootSystemPtr& sys() const { return sys_; }
    const RootBasis& basis() const { return basis_; }

    size_t size() const { return gens_.size(); }
    const LabGen& gen(size_t i) const { return gens_[i]; }
    int index_of(const std::string& name) const;

    // Super bracket [x_i, x_j] expressed in the basis.
    const AlgCombo& bracket(size_t i, size_t j) const { return brk_[i][j]; }
    AlgCombo bracket_combo(const AlgCombo& a, const AlgCombo& b) const;

    // Non-Cartan elements are graded by the sign of the basis height of
    // their weight. Cartan elements have weight zero.
    bool is_cartan(size_t i) const { return !gens_[i].cartan_vec.empty(); }
    Rat height_of(size_t i) const;  // basis height of the weight

    // lambda(h_i) for a Cartan element; representative-independent for the
    // quotient families.
    Rat weight_eval(const Weight& lam, size_t cartan_elem) const;

    // ad(f)^k (x) chains; N(x) = nilpotence degree of ad(f) on x.
    AlgCombo ad(size_t f, const AlgCombo& x) const;
    int ad_nilpotence(size_t f, size_t x) const;

    // Elements whose weight has the given sign of level under l (Cartan at
    // level 0). l is a coordinate functional.
    std::vector<size_t> elems_with_level_sign(const std::vector<Rat>& l, int sign) const;

  private:
    LabAlgebra() = default;
    void finish(std::vector<std::vector<std::vector<Rat>>> mats,
                std::vector<int> parities, std::vector<std::string> names,
                bool super, size_t even_rows);

    std::string name_;
    RootSystemPtr sys_;
    RootBasis basis_{};
    std::vector<LabGen> gens_;
    std::vector<std::vector<AlgCombo>> brk_;
};

}  // namespace sw::lab
