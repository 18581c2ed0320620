#pragma once

#include "qlink/modular.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace qlink {

/// Invariant of the closed oriented 3-manifold presented by surgery.
/// `corrected` carries the framing correction (the inverse framed-unknot
/// value raised to the linking-matrix signature) and depends only on
/// the manifold; `biframed` omits it and is graded by the signature.
struct RTValue {
    SqrtExt corrected;
    SqrtExt biframed;
    int sig = 0;

    std::complex<double> numeric() const { return corrected.numeric(); }
};

struct RTOptions {
    int threads = 0;                          // 0: QLINK_THREADS or 1
    unsigned long long max_cost = 10000000ull; // coloring tuple budget
};

/// Sum over all label colorings of the weighted invariant:
///   K^-1 K^-c  sum over colorings  prod_i [n_i] F(L; labels, framings),
/// framing-corrected by C^signature.  Colorings are partitioned across
/// threads with exact partial sums folded in fixed order.  Presentations
/// whose coloring count exceeds the budget (or with more than eight
/// components above l = 6) are refused with a cost estimate.
RTValue rt_invariant(const SurgeryPresentation& p, const ModularData& md,
                     const RTOptions& opts = {});

/// Value on the empty presentation, K^-1.
SqrtExt s3_value(const ModularData& md);

/// Trivalent spine of a handlebody; vertices list their three incident
/// edges (a loop lists its edge twice).
struct TrivalentSpine {
    std::vector<std::array<int, 3>> vertices;
    int edge_count = 0;
    int genus() const { return edge_count - static_cast<int>(vertices.size()) + 1; }
};

/// Chain-of-handles spine, defined for every genus >= 2.
TrivalentSpine caterpillar_spine(int genus);
/// An inequivalent pants decomposition for genus 2 and 3.
TrivalentSpine theta_spine(int genus);

/// Number of admissible labelings: the product of fusion multiplicities
/// over vertices, summed over edge labelings.
long spine_labelings(const TrivalentSpine& spine, const ModularData& md);

/// State-space dimension for a closed genus-g surface: 1 at genus 0,
/// the label count at genus 1, spine counting above.
long tqft_dim(int genus, const ModularData& md);

struct KirbyReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_passed() const;
    std::string summary() const;
};

/// Before/after presentations of one manifold, related by handle
/// slides.  `max_level` caps the l at which the pair is affordable
/// (0 means no cap).
struct SlidePair {
    SurgeryPresentation before;
    SurgeryPresentation after;
    long max_level = 0;
};

/// Stabilization invariance on every corpus entry (both signs) plus
/// exact agreement on each affordable handle-slide pair, with a
/// negative control confirming that an uncorrected framing change
/// moves the value.
KirbyReport kirby_invariance_suite(const ModularData& md,
                                   const std::vector<SurgeryPresentation>& corpus,
                                   const std::vector<SlidePair>& slide_pairs,
                                   const RTOptions& opts = {});

/// Loads `corpus.txt` / `slide_pairs.txt` manifests from a directory of
/// .surgery files.
std::vector<SurgeryPresentation> load_corpus(const std::string& dir);
std::vector<SlidePair> load_slide_pairs(const std::string& dir);

} // namespace qlink
