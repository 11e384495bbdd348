#include "ordlab/nat_oracles.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace ordlab {

Natural SearchBox::bound(const std::string& var) const {
    auto it = bounds.find(var);
    return it == bounds.end() ? fallback : it->second;
}

Natural nat_lcm(const Natural& i, const Natural& j) {
    if (i == 0 || j == 0) return 0;
    return i / boost::integer::gcd(i, j) * j;
}

namespace {

// Odometer over the box; the callback returns false to stop.
template <class F>
void scan_box(const std::vector<std::string>& vars, const SearchBox& box, F&& visit) {
    const Natural lo = box.exclude_zero ? 1 : 0;
    std::vector<Natural> hi;
    for (const auto& v : vars) {
        hi.push_back(box.bound(v));
        if (hi.back() < lo) return;
    }
    NatAssignment a;
    for (const auto& v : vars) a[v] = lo;
    for (;;) {
        if (!visit(a)) return;
        std::size_t k = vars.size();
        for (;;) {
            if (k == 0) return;
            --k;
            Natural& x = a[vars[k]];
            if (x < hi[k]) {
                ++x;
                break;
            }
            x = lo;
        }
    }
}

}  // namespace

std::optional<NatAssignment> sat_system(const NatSystem& s, const SearchBox& box) {
    std::optional<NatAssignment> found;
    scan_box(s.variables(), box, [&](const NatAssignment& a) {
        if (!eval_system(s, a)) return true;
        found = a;
        return false;
    });
    return found;
}

std::vector<NatAssignment> solve_diophantine(const DiophEquation& e, const SearchBox& box) {
    std::vector<NatAssignment> out;
    scan_box(e.variables(), box, [&](const NatAssignment& a) {
        if (e.holds(a)) out.push_back(a);
        return true;
    });
    return out;
}

std::vector<std::string> words_up_to(std::size_t max_len) {
    std::vector<std::string> out{""};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            out.push_back(out[i] + 'a');
            out.push_back(out[i] + 'b');
        }
        begin = end;
    }
    return out;
}

std::vector<WordAssignment> solve_word_equation(const WordEquation& we, std::size_t max_len) {
    const auto vars = we.variables();
    const auto words = words_up_to(max_len);
    std::vector<WordAssignment> out;
    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
        WordAssignment a;
        for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = words[idx[i]];
        if (word_solution_holds(we, a)) out.push_back(std::move(a));
        std::size_t k = vars.size();
        for (;;) {
            if (k == 0) return out;
            --k;
            if (++idx[k] < words.size()) break;
            idx[k] = 0;
        }
    }
}

}  // namespace ordlab
