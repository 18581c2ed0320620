#pragma once

#include "qlink/braid.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qlink {

/// One 4-valent vertex of a planar diagram.  Slots hold arc identifiers
/// in counterclockwise order starting from the incoming under-strand,
/// so the under-strand runs slot 0 -> slot 2 and the over-strand
/// occupies slots 1 and 3.
struct Crossing {
    std::array<int, 4> arc;
};

/// Endpoint of an arc: (crossing index, slot).
struct ArcEnd {
    int crossing = -1;
    int slot = -1;
    bool operator==(const ArcEnd& o) const { return crossing == o.crossing && slot == o.slot; }
};

/// Planar-diagram representation of an oriented framed link.  Validation
/// derives the component partition and a consistent orientation (each
/// arc flows from tail() to head()); inconsistent tuples are rejected.
/// `free_loops` counts crossingless unknot components, which PD tuples
/// cannot express.
class LinkDiagram {
public:
    LinkDiagram() = default;
    LinkDiagram(std::vector<Crossing> crossings, int free_loops = 0, std::string name = "");

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int free_loops() const { return free_loops_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    bool empty() const { return crossings_.empty() && free_loops_ == 0; }

    /// Arc ids in increasing order.
    const std::vector<int>& arcs() const { return arcs_; }
    /// Total component count, free loops included.
    int component_count() const { return arc_component_count_ + free_loops_; }
    int component_of_arc(int arc) const;
    /// Arcs of component c (empty for free-loop components, which are
    /// numbered after the arc components).
    std::vector<int> component_arcs(int c) const;

    ArcEnd tail(int arc) const; // arc flows tail -> head
    ArcEnd head(int arc) const;
    /// +1 if the over-strand runs slot 3 -> slot 1, else -1.
    int crossing_sign(int crossing) const;

    long writhe() const;
    long self_writhe(int component) const;
    /// Linking number between distinct components (half the signed count
    /// of crossings they share).
    long linking_number(int comp_a, int comp_b) const;

    LinkDiagram mirrored() const;
    /// Inserts a Reidemeister-I kink on the given component; changes its
    /// self-writhe by `sign`.
    LinkDiagram with_kink(int component, int sign) const;
    /// Undoes with_kink at the given crossing (which must be a kink).
    LinkDiagram without_kink(int crossing) const;
    /// Replaces one crossing by its mirror.
    LinkDiagram with_crossing_switched(int crossing) const;
    /// Orientation-respecting smoothing of one crossing.
    LinkDiagram with_crossing_smoothed(int crossing) const;

    friend LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

private:
    void validate_and_index();
    int slot_arc(const ArcEnd& e) const { return crossings_[e.crossing].arc[e.slot]; }

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::string name_;

    std::vector<int> arcs_;
    std::map<int, std::array<ArcEnd, 2>> ends_;   // the two endpoints of each arc
    std::map<int, int> component_;                // arc -> component id
    int arc_component_count_ = 0;
    std::map<int, bool> flows_to_second_;         // arc orientation: ends_[0] -> ends_[1]?
};

/// Grammar: crossing tuples `X(a,b,c,d)` plus optional `U` tokens for
/// crossingless unknot components, whitespace separated.  "" parses to
/// the empty link.
LinkDiagram parse_pd(const std::string& text);
std::string pd_string(const LinkDiagram& d);

/// Trace closure of a braid; component count equals the cycle count of
/// the braid permutation.
LinkDiagram braid_closure(const BraidWord& b);

/// Accepts either a braid word (prefix "braid") or PD text.
LinkDiagram parse_diagram(const std::string& text);

/// Framed link presenting a closed oriented 3-manifold by surgery.
/// Framings are absolute integers per component, independent of the
/// diagram's blackboard framing.
struct SurgeryPresentation {
    LinkDiagram diagram;
    std::vector<long> framings;
    std::string name;

    void validate() const;
    /// Adds a split +-1-framed unknot component.
    SurgeryPresentation stabilized(int sign) const;
};

SurgeryPresentation disjoint_union(const SurgeryPresentation& a, const SurgeryPresentation& b);

/// Text format: a braid or PD line, then `framings: [f1, f2, ...]`,
/// optionally `name: ...`; '#' starts a comment.
SurgeryPresentation parse_surgery(const std::string& text);
std::string surgery_string(const SurgeryPresentation& p);

/// Symmetric matrix with framings on the diagonal and linking numbers
/// off it.
std::vector<std::vector<long>> linking_matrix(const SurgeryPresentation& p);

/// Signature of a symmetric integer matrix via exact symmetric Gaussian
/// elimination over the rationals.
int signature(const std::vector<std::vector<long>>& m);

} // namespace qlink
