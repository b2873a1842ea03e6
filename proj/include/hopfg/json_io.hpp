#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfg/hopf.hpp"

namespace hopfg {

/*
 * Family defined by an explicit structure-constant file over a finite grade
 * group. Grades are index-kind and point into the loaded group table. The
 * file format is documented in the README; every lookup the axioms need
 * (all algebras, all coproduct pairs, all antipodes, all pivots) must be
 * present, which load-time validation enforces.
 */
class JsonHopfFamily final : public HopfGFamily {
public:
    Grade unit_grade() const override { return Grade::of_index(unit_); }
    Grade compose(const Grade& a, const Grade& b) const override;
    Grade inverse(const Grade& a) const override;
    long modulus() const override { return N_; }
    std::string describe() const override;

    int group_order() const { return (int)elements_.size(); }
    const std::string& grade_label(const Grade& g) const;
    // Every grade once, in table order; the natural check window.
    std::vector<Grade> all_grades() const;

protected:
    GradedAlgebra build_algebra(const Grade& a) const override;
    SparseMatrix build_coproduct(const Grade& a, const Grade& b) const override;
    Vec build_counit() const override;
    SparseMatrix build_antipode(const Grade& a) const override;
    Vec build_pivot(const Grade& a) const override;

private:
    friend std::unique_ptr<JsonHopfFamily> parse_family_json(const std::string& text);

    std::vector<std::string> elements_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    int unit_ = 0;
    long N_ = 1;
    std::vector<GradedAlgebra> algebras_;
    std::vector<std::vector<SparseMatrix>> coproducts_;  // [a][b]
    std::vector<SparseMatrix> antipodes_;
    std::vector<Vec> pivots_;
    Vec counit_;

    int idx(const Grade& g) const;
};

// Parse a family from JSON text resp. from a file on disk. Any missing key,
// malformed entry, out-of-range index or broken group table raises
// SchemaError with a path-like description of the offending field. The
// family is heap-allocated because the memoizing base class is not movable.
std::unique_ptr<JsonHopfFamily> parse_family_json(const std::string& text);
std::unique_ptr<JsonHopfFamily> load_family_json(const std::string& path);

}  // namespace hopfg
