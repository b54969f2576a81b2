#include <matdiv/error.hpp>
#include <matdiv/flag.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace matdiv {

Flag::Flag(int ambient, int lo, std::vector<Subspace> chain)
    : ambient_(ambient), lo_(lo), chain_(std::move(chain)), zero_(Subspace::zero(ambient)) {
    if (chain_.empty()) throw dimension_error("flag chain must be nonempty");
    for (const Subspace& s : chain_)
        if (s.ambient() != ambient_) throw dimension_error("flag member has wrong ambient dimension");
}

Flag Flag::trivial(int ambient) {
    return Flag(ambient, 0, {Subspace::full(ambient)});
}

const Subspace& Flag::at(int i) const {
    if (i < lo_) return zero_;
    if (i > hi()) return chain_.back();
    return chain_[static_cast<std::size_t>(i - lo_)];
}

bool Flag::nested() const {
    for (std::size_t i = 0; i + 1 < chain_.size(); ++i)
        if (!chain_[i + 1].contains(chain_[i])) return false;
    return true;
}

bool Flag::complete_right() const {
    return chain_.back().dim() == ambient_;
}

Flag Flag::transformed(const Mat& g) const {
    std::vector<Subspace> out;
    out.reserve(chain_.size());
    for (const Subspace& s : chain_) out.push_back(s.transformed(g));
    return Flag(ambient_, lo_, std::move(out));
}

Flag Flag::canonical() const {
    std::size_t first = 0, last = chain_.size() - 1;
    while (first < last && chain_[first].dim() == 0) ++first;
    while (last > first && chain_[last] == chain_[last - 1]) --last;
    if (first == last && chain_[first].dim() == 0)
        return Flag(ambient_, 0, {Subspace::zero(ambient_)});
    return Flag(ambient_, lo_ + static_cast<int>(first),
                std::vector<Subspace>(chain_.begin() + static_cast<long>(first),
                                      chain_.begin() + static_cast<long>(last) + 1));
}

bool Flag::operator==(const Flag& o) const {
    Flag a = canonical(), b = o.canonical();
    return a.ambient_ == b.ambient_ && a.lo_ == b.lo_ && a.chain_ == b.chain_;
}

std::string Flag::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < chain_.size(); ++i) {
        os << "F_" << (lo_ + static_cast<int>(i)) << " (dim " << chain_[i].dim() << "):\n"
           << chain_[i].str();
    }
    return os.str();
}

namespace {

bool same_point_sets(const FlagConfiguration& a, const FlagConfiguration& b,
                     std::vector<std::size_t>& b_index_of_a) {
    if (a.points.size() != b.points.size()) return false;
    b_index_of_a.resize(a.points.size());
    std::vector<bool> used(b.points.size(), false);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < b.points.size(); ++j) {
            if (!used[j] && a.points[i] == b.points[j]) {
                used[j] = true;
                b_index_of_a[i] = j;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

bool flags_equal_up_to_shift(const FlagConfiguration& a, const FlagConfiguration& b,
                             const Mat& g, FlagMatchMode mode) {
    if (a.flags.size() != a.points.size() || b.flags.size() != b.points.size())
        throw dimension_error("flag configuration: points/flags length mismatch");
    if (!g.is_square() || rank_of(g) != g.rows()) throw domain_error("shift matrix must be invertible");

    if (mode == FlagMatchMode::pointwise) {
        std::vector<std::size_t> at;
        if (!same_point_sets(a, b, at)) return false;
        for (std::size_t i = 0; i < a.flags.size(); ++i)
            if (a.flags[i].transformed(g) != b.flags[at[i]]) return false;
        return true;
    }

    // Multiset match: every shifted chain of a must pair off with a distinct
    // equal chain of b.
    if (a.flags.size() != b.flags.size()) return false;
    std::vector<bool> used(b.flags.size(), false);
    for (const Flag& fa : a.flags) {
        Flag shifted = fa.transformed(g);
        bool found = false;
        for (std::size_t j = 0; j < b.flags.size(); ++j) {
            if (!used[j] && shifted == b.flags[j]) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace matdiv
