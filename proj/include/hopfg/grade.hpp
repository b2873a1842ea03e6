#pragma once

#include <compare>
#include <string>

#include "hopfg/rational.hpp"

namespace hopfg {

/*
 * Exact grade label. A family is graded either by a finite group (labels are
 * indices into its element list) or by an exact rational label (the quantum sl2
 * instance uses C/2Z with rational representatives in [0,2)). The group
 * operations themselves live on the family; Grade is only the value type, so
 * it never normalizes anything by itself.
 */
class Grade {
public:
    Grade() : kind_(Kind::Index), idx_(0) {}

    static Grade of_index(long i) {
        Grade g;
        g.kind_ = Kind::Index;
        g.idx_ = i;
        return g;
    }

    static Grade of_rational(const Rational& r) {
        Grade g;
        g.kind_ = Kind::Rat;
        g.rat_ = r;
        return g;
    }

    bool is_index() const { return kind_ == Kind::Index; }
    long index() const {
        if (!is_index()) throw GradeMismatch("grade is not a group index");
        return idx_;
    }
    const Rational& rational() const {
        if (is_index()) throw GradeMismatch("grade is not rational");
        return rat_;
    }

    bool operator==(const Grade& o) const {
        if (kind_ != o.kind_) return false;
        return is_index() ? idx_ == o.idx_ : rat_ == o.rat_;
    }
    bool operator!=(const Grade& o) const { return !(*this == o); }
    bool operator<(const Grade& o) const {
        if (kind_ != o.kind_) return kind_ < o.kind_;
        if (is_index()) return idx_ < o.idx_;
        return rat_ < o.rat_;
    }

    std::string str() const {
        return is_index() ? std::to_string(idx_) : rational_str(rat_);
    }

private:
    enum class Kind { Index, Rat };
    Kind kind_;
    long idx_ = 0;
    Rational rat_;
};

}  // namespace hopfg
