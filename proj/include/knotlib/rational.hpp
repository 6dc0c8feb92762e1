// Exact rational closed intervals, optionally intersected with a lattice
// step*Z + offset. These carry the concordance-invariant value sets.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace knotlib {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat x(num, den);
    x.canonicalize();
    return x;
}

inline Rat rat_floor(const Rat& x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rat(f);
}

struct Lattice {
    Rat step;    // > 0
    Rat offset;  // admissible points are offset + step*Z
    bool operator==(const Lattice&) const = default;
};

class RatInterval {
  public:
    RatInterval() : lo_(0), hi_(0) {}
    RatInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw std::domain_error("RatInterval: lo > hi");
    }
    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    const std::optional<Lattice>& lattice() const { return lattice_; }
    bool is_point() const { return lo_ == hi_; }
    bool operator==(const RatInterval&) const = default;

    RatInterval with_lattice(const Rat& step, const Rat& offset = 0) const {
        if (step <= 0) throw std::domain_error("lattice step must be positive");
        RatInterval out = *this;
        out.lattice_ = Lattice{step, offset};
        return out;
    }

    bool contains(const Rat& v) const {
        if (v < lo_ || v > hi_) return false;
        if (!lattice_) return true;
        Rat k = (v - lattice_->offset) / lattice_->step;
        return k.get_den() == 1;
    }

    RatInterval operator+(const RatInterval& o) const {
        return merged_lattice(o, RatInterval(lo_ + o.lo_, hi_ + o.hi_));
    }
    RatInterval operator-() const {
        RatInterval out(-hi_, -lo_);
        if (lattice_) out.lattice_ = Lattice{lattice_->step, -lattice_->offset};
        return out;
    }
    RatInterval operator-(const RatInterval& o) const { return *this + (-o); }
    RatInterval scaled(const Rat& c) const {
        if (c == 0) return point(0);
        RatInterval out = c > 0 ? RatInterval(lo_ * c, hi_ * c)
                                : RatInterval(hi_ * c, lo_ * c);
        if (lattice_)
            out.lattice_ = Lattice{abs(Rat(lattice_->step * c)), lattice_->offset * c};
        return out;
    }

    // Intersection; empty result reported via nullopt.
    std::optional<RatInterval> intersect(const RatInterval& o) const {
        Rat lo = std::max(lo_, o.lo_), hi = std::min(hi_, o.hi_);
        if (lo > hi) return std::nullopt;
        RatInterval out(lo, hi);
        if (lattice_ && o.lattice_ && !(*lattice_ == *o.lattice_))
            throw std::domain_error("intersect: incompatible lattices");
        out.lattice_ = lattice_ ? lattice_ : o.lattice_;
        return out.snap();
    }

    // Tighten endpoints to lattice points; empty -> nullopt.
    std::optional<RatInterval> snap() const {
        if (!lattice_) return *this;
        const Rat &s = lattice_->step, &off = lattice_->offset;
        Rat klo = -rat_floor((off - lo_) / s);   // ceil((lo-off)/s)
        Rat khi = rat_floor((hi_ - off) / s);
        Rat nlo = off + klo * s, nhi = off + khi * s;
        if (nlo > nhi) return std::nullopt;
        RatInterval out(nlo, nhi);
        out.lattice_ = lattice_;
        return out;
    }

    // Admissible points, when the lattice makes the set finite.
    std::vector<Rat> candidates() const {
        std::vector<Rat> out;
        if (!lattice_) {
            if (is_point()) out.push_back(lo_);
            return out;  // continuum: reported empty
        }
        auto t = snap();
        if (!t) return out;
        for (Rat v = t->lo(); v <= t->hi(); v += lattice_->step) out.push_back(v);
        return out;
    }

    std::string str() const;

  private:
    RatInterval merged_lattice(const RatInterval& o, RatInterval out) const {
        if (lattice_ && o.lattice_ && lattice_->step == o.lattice_->step)
            out.lattice_ = Lattice{lattice_->step, lattice_->offset + o.lattice_->offset};
        return out;
    }

    Rat lo_, hi_;
    std::optional<Lattice> lattice_;
};

inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline std::string RatInterval::str() const {
    if (is_point() && !lattice_) return rat_str(lo_);
    std::string s = "[" + rat_str(lo_) + ", " + rat_str(hi_) + "]";
    if (lattice_) {
        auto c = candidates();
        s = "{";
        for (size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + rat_str(c[i]);
        s += "}";
    }
    return s;
}

}  // namespace knotlib
