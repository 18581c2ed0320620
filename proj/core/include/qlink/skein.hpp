#pragma once

#include "qlink/laurent.hpp"
#include "qlink/link_diagram.hpp"

#include <string>

namespace qlink {

/// Bracket of an unoriented framed diagram by the full resolution sum:
/// over all 2^c smoothings, A^(#A - #B) times (-A^2 - A^-2)^#loops, with
/// the empty diagram at 1.  Loop counting is union-find over arcs.  The
/// resolution space may be partitioned across threads; partial sums are
/// folded in a fixed order so the result is thread-count independent.
Laurent bracket_statesum(const LinkDiagram& d, int threads = 0);

/// The same invariant through the tangle functor: slice the diagram,
/// then chain the generator matrices.  Exactly equal to
/// bracket_statesum on every diagram; the two paths are independent
/// implementations.
Laurent bracket_functor(const LinkDiagram& d);

/// Jones polynomial: (-A)^(-3 writhe) times the bracket, with
/// t^(-1/4) substituted for A.  Lives in quarter powers of t.
Laurent jones(const LinkDiagram& d);

/// Jones divided by its unknot value -t^(1/2) - t^(-1/2); rejects the
/// empty link, whose Jones value 1 is not divisible.
Laurent jones_reduced(const LinkDiagram& d);

/// Renders a quarter-power polynomial like "t^(1/2)*(t^4 - t^2 - t - 1)"
/// when a common fractional power can be factored out, falling back to
/// explicit fractional exponents otherwise.
std::string jones_string(const Laurent& v);

} // namespace qlink
