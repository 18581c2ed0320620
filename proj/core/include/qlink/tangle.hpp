#pragma once

#include "qlink/link_diagram.hpp"

#include <string>
#include <vector>

namespace qlink {

enum class GenKind : std::uint8_t { Over, Under, Cup, Cap, Id, Coupon };

/// One generator inside a slice.  Over/Under are 2->2, Cup 0->2,
/// Cap 2->0, Id 1->1; a coupon declares its own arities.
struct Gen {
    GenKind kind = GenKind::Id;
    std::string coupon;
    int coupon_in = 0;
    int coupon_out = 0;

    int arity_in() const;
    int arity_out() const;
    bool operator==(const Gen& o) const {
        return kind == o.kind && coupon == o.coupon && coupon_in == o.coupon_in &&
               coupon_out == o.coupon_out;
    }
};

/// Strand metadata at a slice boundary: which diagram component the
/// strand belongs to and whether it points up (with the component's
/// orientation) at this level.
struct StrandInfo {
    int component = -1;
    bool up = true;
    bool operator==(const StrandInfo& o) const { return component == o.component && up == o.up; }
};

/// Morse-sliced tangle: a chain of horizontal slices, each a tensor of
/// generators.  `levels[k]` describes the strands entering slice k;
/// `levels[slices.size()]` the output strands.  Closed words have empty
/// first and last levels.
struct TangleWord {
    std::vector<std::vector<Gen>> slices;
    std::vector<std::vector<StrandInfo>> levels;

    bool closed() const { return levels.front().empty() && levels.back().empty(); }
    int max_width() const;

    /// Checks that adjacent slices have matching strand counts; throws
    /// ValidationError naming the first bad slice.
    void validate() const;
};

/// Deterministic sweep-line slicing of a planar diagram into a closed
/// tangle word.  The word is correct up to the choice of Morse
/// presentation: its functor evaluation equals the diagram's bracket.
TangleWord to_tangle_word(const LinkDiagram& d);

/// DSL: one slice per line, generators comma separated, from
/// {over, under, cup, cap, id, coupon(<name>,<in>,<out>)}.
TangleWord parse_tangle_dsl(const std::string& text);
std::string tangle_dsl_string(const TangleWord& w);

} // namespace qlink
