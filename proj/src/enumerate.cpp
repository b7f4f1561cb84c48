#include "ncolor/enumerate.hpp"

#include <algorithm>

#include "ncolor/bijections.hpp"

namespace ncolor {

namespace {

void check_request(const EnumerationRequest& req) {
    if (req.n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
    if (req.parts && *req.parts < 0) {
        throw std::invalid_argument("part-count filter must be nonnegative");
    }
    if (req.n > req.cap) {
        throw CapExceededError(req.n, req.cap);
    }
}

unsigned long long count_walk(int remaining, int parts_left, const ColorConstraint& constraint) {
    // Leaf totals stay far below 2^63 for any walk that can finish.
    unsigned long long total = 0;
    std::vector<ColoredPart> prefix;
    detail::walk_colored(remaining, parts_left, constraint, prefix,
                         [&total](std::span<const ColoredPart>) { ++total; });
    return total;
}

}  // namespace

void enumerate_colored(const EnumerationRequest& req,
                       const std::function<void(const ColoredComposition&)>& visit) {
    check_request(req);
    std::vector<ColoredPart> prefix;
    detail::walk_colored(req.n, req.parts.value_or(-1), req.constraint, prefix,
                         [&visit](std::span<const ColoredPart> parts) {
                             visit(ColoredComposition(
                                 std::vector<ColoredPart>(parts.begin(), parts.end())));
                         });
}

std::vector<ColoredComposition> list_colored(const EnumerationRequest& req) {
    std::vector<ColoredComposition> out;
    enumerate_colored(req, [&out](const ColoredComposition& comp) { out.push_back(comp); });
    return out;
}

BigInt count_colored(const EnumerationRequest& req) {
    check_request(req);
    return BigInt(count_walk(req.n, req.parts.value_or(-1), req.constraint));
}

BigInt count_colored_parallel(const EnumerationRequest& req) {
    check_request(req);

    // Expand the first two part choices into independent jobs; the leading
    // branches own very uneven subtrees, so one level alone balances badly.
    struct Job {
        int remaining;
        int parts_left;
    };
    std::vector<Job> jobs;
    unsigned long long direct = 0;
    auto expand = [&](auto&& self, int remaining, int parts_left, int depth) -> void {
        if (remaining == 0) {
            if (parts_left <= 0) {
                ++direct;
            }
            return;
        }
        if (parts_left == 0 || (parts_left > 0 && remaining < parts_left)) {
            return;
        }
        if (depth == 2) {
            jobs.push_back({remaining, parts_left});
            return;
        }
        const int next_left = parts_left > 0 ? parts_left - 1 : -1;
        for (int size = 1; size <= remaining; ++size) {
            for (int color = 1; color <= size; ++color) {
                if (req.constraint.permits(size, color)) {
                    self(self, remaining - size, next_left, depth + 1);
                }
            }
        }
    };
    expand(expand, req.n, req.parts.value_or(-1), 0);

    std::vector<unsigned long long> partial(jobs.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(jobs.size()); ++i) {
        partial[i] = count_walk(jobs[i].remaining, jobs[i].parts_left, req.constraint);
    }

    unsigned long long total = direct;
    for (unsigned long long p : partial) {
        total += p;
    }
    return BigInt(total);
}

CountSequence seq_enumerated(const ColorConstraint& constraint, int horizon, int cap) {
    if (horizon < 0) {
        throw std::invalid_argument("horizon must be nonnegative");
    }
    CountSequence seq;
    seq.method = CountSequence::Method::Enumerate;
    seq.constraint = constraint;
    seq.values.reserve(horizon + 1);
    for (int n = 0; n <= horizon; ++n) {
        seq.values.push_back(
            count_colored({.n = n, .constraint = constraint, .parts = {}, .cap = cap}));
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Regular-composition families
// ---------------------------------------------------------------------------

RegularFamily RegularFamily::min_parts(int c) {
    if (c < 1) {
        throw std::invalid_argument("min-parts family requires c >= 1");
    }
    return {Kind::MinParts, c, 0, 0};
}

RegularFamily RegularFamily::one_c(int c) {
    if (c < 2) {
        throw std::invalid_argument("one-c family requires c >= 2");
    }
    return {Kind::OneC, c, 0, 0};
}

RegularFamily RegularFamily::typed(int b, int c) {
    if (b < 1 || b >= c) {
        throw std::invalid_argument("typed family requires 1 <= b < c");
    }
    return {Kind::Typed, c, b, 0};
}

RegularFamily RegularFamily::mixed(int b, int c) {
    if (b < 2 || b >= c) {
        throw std::invalid_argument("mixed family requires 2 <= b < c");
    }
    return {Kind::Mixed, c, b, 0};
}

RegularFamily RegularFamily::mod_2d(int d) {
    if (d < 1) {
        throw std::invalid_argument("mod-2d family requires d >= 1");
    }
    return {Kind::Mod2d, 0, 0, d};
}

RegularFamily RegularFamily::mod3() {
    return {Kind::Mod3, 0, 0, 0};
}

RegularFamily RegularFamily::tagged_ones() {
    return {Kind::TaggedOnes, 0, 0, 0};
}

std::string RegularFamily::describe() const {
    switch (kind) {
        case Kind::MinParts:
            return "minparts[c=" + std::to_string(c) + "]";
        case Kind::OneC:
            return "onec[c=" + std::to_string(c) + "]";
        case Kind::Typed:
            return "typed[b=" + std::to_string(b) + ",c=" + std::to_string(c) + "]";
        case Kind::Mixed:
            return "mixed[b=" + std::to_string(b) + ",c=" + std::to_string(c) + "]";
        case Kind::Mod2d:
            return "mod2d[d=" + std::to_string(d) + "]";
        case Kind::Mod3:
            return "mod3";
        case Kind::TaggedOnes:
            return "tagged-ones";
    }
    return "?";
}

namespace {

using Visit = std::function<void(const RegularComposition&)>;

void emit(const RegularComposition& comp, const RegularFamily& family, const Visit& visit) {
    if (family.kind == RegularFamily::Kind::Mod2d &&
        !in_mod2d_family(comp, family.d)) {  // follower rule checked by post-scan
        return;
    }
    visit(comp);
}

// Part values the family admits at this position, ascending.
void family_values(const RegularFamily& family, bool first, long long remaining,
                   std::vector<long long>& out) {
    out.clear();
    switch (family.kind) {
        case RegularFamily::Kind::MinParts:
            for (long long v = family.c; v <= remaining; ++v) {
                out.push_back(v);
            }
            break;
        case RegularFamily::Kind::OneC:
            if (!first && 1 <= remaining) {
                out.push_back(1);
            }
            if (family.c <= remaining) {
                out.push_back(family.c);
            }
            break;
        case RegularFamily::Kind::Typed:
            for (long long v = family.b; v <= remaining; ++v) {
                out.push_back(v);
            }
            break;
        case RegularFamily::Kind::Mixed:
            if (!first && 1 <= remaining) {
                out.push_back(1);
            }
            if (family.b <= remaining) {
                out.push_back(family.b);
            }
            if (family.c <= remaining) {
                out.push_back(family.c);
            }
            break;
        case RegularFamily::Kind::Mod2d:
            for (long long v = 1; v <= remaining; ++v) {
                long long residue = v % (2LL * family.d);
                if (residue == 0) {
                    residue = 2LL * family.d;
                }
                // For d = 1 the image is all compositions (no residue cut).
                if (family.d == 1 || residue <= family.d) {
                    out.push_back(v);
                }
            }
            break;
        case RegularFamily::Kind::Mod3:
            for (long long v = 2; v <= remaining; v += 3) {
                out.push_back(v);
            }
            break;
        case RegularFamily::Kind::TaggedOnes:
            if (remaining >= 1) {
                out.push_back(1);
            }
            break;
    }
}

bool family_typed(const RegularFamily& family) {
    return family.kind == RegularFamily::Kind::Typed ||
           family.kind == RegularFamily::Kind::TaggedOnes;
}

void walk_regular(long long remaining, bool first, const RegularFamily& family,
                  RegularComposition& prefix, const Visit& visit) {
    if (remaining == 0) {
        emit(prefix, family, visit);
        return;
    }
    std::vector<long long> values;
    family_values(family, first, remaining, values);
    const bool typed = family_typed(family);
    for (long long v : values) {
        const int max_tag =
            (family.kind == RegularFamily::Kind::Typed && v < family.c) ? 1 : (typed ? 2 : 1);
        for (int tag = 1; tag <= max_tag; ++tag) {
            prefix.parts.push_back(v);
            if (typed) {
                prefix.tags.push_back(tag);
            }
            walk_regular(remaining - v, false, family, prefix, visit);
            prefix.parts.pop_back();
            if (typed) {
                prefix.tags.pop_back();
            }
        }
    }
}

}  // namespace

void enumerate_regular(int n, const RegularFamily& family, const Visit& visit, int cap) {
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative");
    }
    if (n > cap) {
        throw CapExceededError(n, cap);
    }
    // The tagged-ones family lives one below its nominal n: its members sum
    // to n-1, matching the single-allowed-color count at n. At n = 0 there
    // is nothing to enumerate.
    const long long target = family.kind == RegularFamily::Kind::TaggedOnes ? n - 1 : n;
    if (target < 0) {
        return;
    }
    RegularComposition prefix;
    walk_regular(target, true, family, prefix, visit);
}

std::vector<RegularComposition> list_regular(int n, const RegularFamily& family, int cap) {
    std::vector<RegularComposition> out;
    enumerate_regular(
        n, family, [&out](const RegularComposition& comp) { out.push_back(comp); }, cap);
    return out;
}

BigInt count_regular(int n, const RegularFamily& family, int cap) {
    unsigned long long total = 0;
    enumerate_regular(
        n, family, [&total](const RegularComposition&) { ++total; }, cap);
    return BigInt(total);
}

bool family_contains(int n, const RegularFamily& family, const RegularComposition& comp) {
    const long long target = family.kind == RegularFamily::Kind::TaggedOnes ? n - 1 : n;
    if (comp.sum() != target) {
        return false;
    }
    switch (family.kind) {
        case RegularFamily::Kind::MinParts:
            return in_min_parts_family(comp, family.c);
        case RegularFamily::Kind::OneC:
            return in_one_c_family(comp, family.c);
        case RegularFamily::Kind::Typed:
            return in_typed_family(comp, family.b, family.c);
        case RegularFamily::Kind::Mixed:
            return in_mixed_family(comp, family.b, family.c);
        case RegularFamily::Kind::Mod2d:
            return in_mod2d_family(comp, family.d);
        case RegularFamily::Kind::Mod3:
            return in_mod3_family(comp);
        case RegularFamily::Kind::TaggedOnes: {
            if (comp.tags.size() != comp.parts.size()) {
                return false;
            }
            for (std::size_t i = 0; i < comp.parts.size(); ++i) {
                if (comp.parts[i] != 1 || (comp.tags[i] != 1 && comp.tags[i] != 2)) {
                    return false;
                }
            }
            return true;
        }
    }
    return false;
}

}  // namespace ncolor
