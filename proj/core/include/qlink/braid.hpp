#pragma once

#include <string>
#include <vector>

namespace qlink {

/// Word in the braid group B_n.  Letters are (index, sign) with
/// 1 <= index < n; sign +1 for the positive generator, -1 for its
/// inverse.  The empty word is the identity braid.
struct BraidWord {
    int strands = 1;
    std::vector<std::pair<int, int>> letters;

    int crossing_count() const { return static_cast<int>(letters.size()); }

    /// Cycle count of the underlying permutation; equals the component
    /// count of the trace closure.
    int closure_components() const;
};

/// Grammar: `braid <n> : <letters>` where each letter is s<i> or s<i>'
/// (prime marks the inverse), whitespace separated.
BraidWord parse_braid(const std::string& text);
std::string braid_string(const BraidWord& b);

} // namespace qlink
