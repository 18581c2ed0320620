#pragma once

#include "qlink/laurent.hpp"
#include "qlink/link_diagram.hpp"
#include "qlink/matrix.hpp"
#include "qlink/modular.hpp"
#include "qlink/rt.hpp"

#include <string>

namespace qlink {

/// {"var":"A","coeffs":{"7":1,"3":1,"-1":1,"-9":-1}}
std::string laurent_json(const Laurent& p);
Laurent laurent_from_json(const std::string& text);

/// {"rows":r,"cols":c,"entries":[[r,c,"A^2 + 1"],...]}
std::string matrix_json(const SparseMatrix<Laurent>& m);

/// {"strands":n,"letters":[[i,sign],...]}
std::string braid_json(const BraidWord& b);
BraidWord braid_from_json(const std::string& text);

/// {"crossings":[[a,b,c,d],...],"free_loops":k}
std::string diagram_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const std::string& text);

/// {"pd":"X(...) ...","framings":[...]}
std::string surgery_json(const SurgeryPresentation& p);
SurgeryPresentation surgery_from_json(const std::string& text);

/// {"a":{...},"b":{...},"radicand":{...}} with cyclotomic values as
/// {"order":N,"coeffs":["1/2","0",...]}
std::string sqrt_ext_json(const SqrtExt& v);

/// Labels, quantum dimensions, fusion tensor, Hopf matrix and twists.
std::string modular_data_json(const ModularData& md);

std::string rt_value_json(const RTValue& v);

} // namespace qlink
