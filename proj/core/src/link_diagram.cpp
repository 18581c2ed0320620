#include "qlink/link_diagram.hpp"

#include "qlink/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace qlink {

namespace {

enum class Mark : std::uint8_t { Unknown, In, Out };

Mark opposite(Mark m) { return m == Mark::In ? Mark::Out : Mark::In; }

} // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops, std::string name)
    : crossings_(std::move(crossings)), free_loops_(free_loops), name_(std::move(name)) {
    if (free_loops_ < 0) throw ValidationError("negative free loop count");
    validate_and_index();
}

void LinkDiagram::validate_and_index() {
    arcs_.clear();
    ends_.clear();
    component_.clear();
    flows_to_second_.clear();

    std::map<int, std::vector<ArcEnd>> occ;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
        for (int s = 0; s < 4; ++s)
            occ[crossings_[c].arc[s]].push_back({c, s});

    for (const auto& [arc, ends] : occ) {
        if (ends.size() != 2)
            throw ValidationError("arc " + std::to_string(arc) + " appears " +
                                  std::to_string(ends.size()) + " times, expected 2");
        ends_[arc] = {ends[0], ends[1]};
        arcs_.push_back(arc);
    }

    // Components: arcs joined through the two through-strands of each
    // crossing (under: slots 0-2, over: slots 1-3).
    std::map<int, int> parent;
    for (int a : arcs_) parent[a] = a;
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& cr : crossings_) {
        unite(cr.arc[0], cr.arc[2]);
        unite(cr.arc[1], cr.arc[3]);
    }
    std::map<int, int> root_to_comp;
    for (int a : arcs_) {
        int r = find(a);
        if (!root_to_comp.count(r)) {
            int id = static_cast<int>(root_to_comp.size());
            root_to_comp[r] = id;
        }
    }
    // Renumber so components are ordered by their smallest arc.
    std::vector<int> min_arc(root_to_comp.size(), -1);
    for (int a : arcs_) {
        int c = root_to_comp[find(a)];
        if (min_arc[c] < 0) min_arc[c] = a; // arcs_ is sorted ascending
    }
    std::vector<int> order(root_to_comp.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return min_arc[x] < min_arc[y]; });
    std::vector<int> renum(order.size());
    for (size_t i = 0; i < order.size(); ++i) renum[order[i]] = static_cast<int>(i);
    for (int a : arcs_) component_[a] = renum[root_to_comp[find(a)]];
    arc_component_count_ = static_cast<int>(root_to_comp.size());

    // Orientation.  Slot 0 is the incoming under-strand and slot 2 the
    // outgoing one; the over-strand must pass through slots 1/3 with one
    // end incoming and one outgoing; every arc has one incoming and one
    // outgoing endpoint.  Propagate these constraints to a fixpoint.
    std::vector<std::array<Mark, 4>> mark(crossings_.size(),
                                          {Mark::Unknown, Mark::Unknown, Mark::Unknown, Mark::Unknown});
    std::deque<ArcEnd> work;
    auto assign = [&](const ArcEnd& e, Mark m) {
        Mark& cur = mark[e.crossing][e.slot];
        if (cur == m) return;
        if (cur != Mark::Unknown)
            throw ValidationError("inconsistent orientation at crossing " +
                                  std::to_string(e.crossing) + " slot " + std::to_string(e.slot));
        cur = m;
        work.push_back(e);
    };
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        assign({c, 0}, Mark::In);
        assign({c, 2}, Mark::Out);
    }
    auto drain = [&]() {
        while (!work.empty()) {
            ArcEnd e = work.front();
            work.pop_front();
            Mark m = mark[e.crossing][e.slot];
            // the other endpoint of the same arc carries the opposite mark
            const auto& pair = ends_[slot_arc(e)];
            ArcEnd other = (pair[0] == e) ? pair[1] : pair[0];
            assign(other, opposite(m));
            // the over-strand through this crossing is one-in-one-out
            if (e.slot == 1 || e.slot == 3)
                assign({e.crossing, e.slot == 1 ? 3 : 1}, opposite(m));
        }
    };
    drain();
    // Components that never pass under receive an arbitrary direction.
    for (int a : arcs_) {
        const auto& pair = ends_[a];
        if (mark[pair[0].crossing][pair[0].slot] == Mark::Unknown) {
            assign(pair[0], Mark::Out);
            drain();
        }
    }
    for (int a : arcs_) {
        const auto& pair = ends_[a];
        flows_to_second_[a] = mark[pair[1].crossing][pair[1].slot] == Mark::In;
    }
}

int LinkDiagram::component_of_arc(int arc) const {
    auto it = component_.find(arc);
    if (it == component_.end())
        throw ValidationError("unknown arc " + std::to_string(arc));
    return it->second;
}

std::vector<int> LinkDiagram::component_arcs(int c) const {
    if (c < 0 || c >= component_count())
        throw ValidationError("unknown component " + std::to_string(c));
    std::vector<int> out;
    for (int a : arcs_)
        if (component_.at(a) == c) out.push_back(a);
    return out;
}

ArcEnd LinkDiagram::tail(int arc) const {
    const auto& pair = ends_.at(arc);
    return flows_to_second_.at(arc) ? pair[0] : pair[1];
}

ArcEnd LinkDiagram::head(int arc) const {
    const auto& pair = ends_.at(arc);
    return flows_to_second_.at(arc) ? pair[1] : pair[0];
}

int LinkDiagram::crossing_sign(int crossing) const {
    const Crossing& cr = crossings_.at(crossing);
    // over-strand incoming at slot 3 means it flows 3 -> 1
    return head(cr.arc[3]) == ArcEnd{crossing, 3} ? 1 : -1;
}

long LinkDiagram::writhe() const {
    long w = 0;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) w += crossing_sign(c);
    return w;
}

long LinkDiagram::self_writhe(int component) const {
    long w = 0;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        const Crossing& cr = crossings_[c];
        if (component_.at(cr.arc[0]) == component && component_.at(cr.arc[1]) == component)
            w += crossing_sign(c);
    }
    return w;
}

long LinkDiagram::linking_number(int comp_a, int comp_b) const {
    if (comp_a == comp_b)
        throw ValidationError("linking number requires distinct components");
    long sum = 0;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        const Crossing& cr = crossings_[c];
        int under = component_.at(cr.arc[0]);
        int over = component_.at(cr.arc[1]);
        if ((under == comp_a && over == comp_b) || (under == comp_b && over == comp_a))
            sum += crossing_sign(c);
    }
    if (sum % 2 != 0)
        throw ValidationError("odd signed crossing count between components");
    return sum / 2;
}

LinkDiagram LinkDiagram::mirrored() const {
    std::vector<Crossing> out;
    out.reserve(crossings_.size());
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        const auto& a = crossings_[c].arc;
        // rotate so the new slot 0 is the incoming end of the old
        // over-strand; over and under trade places
        if (crossing_sign(c) > 0)
            out.push_back({{a[3], a[0], a[1], a[2]}});
        else
            out.push_back({{a[1], a[2], a[3], a[0]}});
    }
    return LinkDiagram(std::move(out), free_loops_, name_.empty() ? "" : name_ + "-mirror");
}

LinkDiagram LinkDiagram::with_kink(int component, int sign) const {
    if (component < 0 || component >= component_count())
        throw ValidationError("unknown component " + std::to_string(component));
    int fresh = arcs_.empty() ? 1 : arcs_.back() + 1;
    std::vector<Crossing> out = crossings_;
    if (component >= arc_component_count_) {
        // free loop: the kink is a one-crossing unknot diagram
        int z = fresh, w = fresh + 1;
        if (sign > 0)
            out.push_back({{z, z, w, w}});
        else
            out.push_back({{w, z, z, w}});
        return LinkDiagram(std::move(out), free_loops_ - 1, name_);
    }
    int x = component_arcs(component).front();
    ArcEnd h = head(x);
    int y = fresh, z = fresh + 1;
    out[h.crossing].arc[h.slot] = y;
    if (sign > 0)
        out.push_back({{z, z, y, x}});
    else
        out.push_back({{x, z, z, y}});
    return LinkDiagram(std::move(out), free_loops_, name_);
}

LinkDiagram LinkDiagram::without_kink(int crossing) const {
    const Crossing& cr = crossings_.at(crossing);
    int x, y; // incoming and outgoing arc of the spliced strand
    if (cr.arc[0] == cr.arc[1]) {        // positive kink X(z,z,y,x)
        x = cr.arc[3];
        y = cr.arc[2];
    } else if (cr.arc[1] == cr.arc[2]) { // negative kink X(x,z,z,y)
        x = cr.arc[0];
        y = cr.arc[3];
    } else {
        throw ValidationError("crossing " + std::to_string(crossing) + " is not a kink");
    }
    std::vector<Crossing> out;
    int loops = free_loops_;
    if (x == y) {
        ++loops; // the kink was a one-crossing unknot
    }
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        if (c == crossing) continue;
        Crossing copy = crossings_[c];
        for (int s = 0; s < 4; ++s)
            if (copy.arc[s] == y) copy.arc[s] = x;
        out.push_back(copy);
    }
    return LinkDiagram(std::move(out), loops, name_);
}

LinkDiagram LinkDiagram::with_crossing_switched(int crossing) const {
    std::vector<Crossing> out = crossings_;
    const auto& a = crossings_.at(crossing).arc;
    if (crossing_sign(crossing) > 0)
        out[crossing] = {{a[3], a[0], a[1], a[2]}};
    else
        out[crossing] = {{a[1], a[2], a[3], a[0]}};
    return LinkDiagram(std::move(out), free_loops_, name_);
}

LinkDiagram LinkDiagram::with_crossing_smoothed(int crossing) const {
    const Crossing& cr = crossings_.at(crossing);
    // The orientation-respecting smoothing joins incoming-under with
    // over-out: for a positive crossing that is (0-1)(2-3), for a
    // negative one (0-3)(1-2).
    std::array<std::pair<int, int>, 2> joins;
    if (crossing_sign(crossing) > 0)
        joins = {{{cr.arc[0], cr.arc[1]}, {cr.arc[2], cr.arc[3]}}};
    else
        joins = {{{cr.arc[0], cr.arc[3]}, {cr.arc[1], cr.arc[2]}}};

    std::vector<Crossing> out;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
        if (c != crossing) out.push_back(crossings_[c]);

    int loops = free_loops_;
    std::map<int, int> rename;
    auto resolve = [&](int a) {
        while (rename.count(a)) a = rename[a];
        return a;
    };
    for (auto [p, q] : joins) {
        p = resolve(p);
        q = resolve(q);
        if (p == q)
            ++loops; // both ends of the same arc joined: a closed loop
        else
            rename[q] = p;
    }
    for (auto& c : out)
        for (int s = 0; s < 4; ++s) c.arc[s] = resolve(c.arc[s]);
    return LinkDiagram(std::move(out), loops, name_);
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
    int offset = 0;
    if (!a.arcs_.empty() && !b.arcs_.empty())
        offset = a.arcs_.back() - b.arcs_.front() + 1;
    std::vector<Crossing> out = a.crossings_;
    for (const auto& cr : b.crossings_) {
        Crossing copy = cr;
        for (int s = 0; s < 4; ++s) copy.arc[s] += offset;
        out.push_back(copy);
    }
    return LinkDiagram(std::move(out), a.free_loops_ + b.free_loops_,
                       a.name_.empty() ? b.name_ : a.name_ + "+" + b.name_);
}

LinkDiagram parse_pd(const std::string& text) {
    std::vector<Crossing> crossings;
    int free_loops = 0;
    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    auto parse_int = [&]() {
        skip_ws();
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start)
            throw ParseError("expected arc label", static_cast<long>(start));
        return std::stoi(text.substr(start, i - start));
    };
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == 'U' || text[i] == 'u') {
            ++free_loops;
            ++i;
            continue;
        }
        if (text[i] != 'X')
            throw ParseError("expected 'X' or 'U'", static_cast<long>(i));
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != '(')
            throw ParseError("expected '(' after X", static_cast<long>(i));
        ++i;
        Crossing cr;
        for (int s = 0; s < 4; ++s) cr.arc[s] = parse_int();
        skip_ws();
        if (i >= text.size() || text[i] != ')')
            throw ParseError("expected ')'", static_cast<long>(i));
        ++i;
        crossings.push_back(cr);
    }
    return LinkDiagram(std::move(crossings), free_loops);
}

std::string pd_string(const LinkDiagram& d) {
    std::ostringstream out;
    bool first = true;
    for (const auto& cr : d.crossings()) {
        if (!first) out << " ";
        first = false;
        out << "X(" << cr.arc[0] << "," << cr.arc[1] << "," << cr.arc[2] << "," << cr.arc[3] << ")";
    }
    for (int k = 0; k < d.free_loops(); ++k) {
        if (!first) out << " ";
        first = false;
        out << "U";
    }
    return out.str();
}

LinkDiagram braid_closure(const BraidWord& b) {
    const int n = b.strands;
    std::vector<int> cur(n + 1);
    for (int j = 1; j <= n; ++j) cur[j] = j;
    int next = n + 1;
    std::vector<Crossing> crossings;
    for (const auto& [i, sign] : b.letters) {
        int x = cur[i], y = cur[i + 1];
        int p = next++, q = next++;
        // strands run upward; x enters at the southwest leg, y southeast,
        // p leaves northwest, q northeast
        if (sign > 0)
            crossings.push_back({{y, q, p, x}});
        else
            crossings.push_back({{x, y, q, p}});
        cur[i] = p;
        cur[i + 1] = q;
    }
    int free_loops = 0;
    std::map<int, int> rename;
    for (int j = 1; j <= n; ++j) {
        if (cur[j] == j)
            ++free_loops; // strand never crossed
        else
            rename[cur[j]] = j;
    }
    for (auto& cr : crossings)
        for (int s = 0; s < 4; ++s) {
            auto it = rename.find(cr.arc[s]);
            if (it != rename.end()) cr.arc[s] = it->second;
        }
    return LinkDiagram(std::move(crossings), free_loops);
}

LinkDiagram parse_diagram(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (text.compare(i, 5, "braid") == 0)
        return braid_closure(parse_braid(text));
    return parse_pd(text);
}

void SurgeryPresentation::validate() const {
    if (static_cast<int>(framings.size()) != diagram.component_count())
        throw ValidationError("framing count " + std::to_string(framings.size()) +
                              " does not match component count " +
                              std::to_string(diagram.component_count()));
}

SurgeryPresentation SurgeryPresentation::stabilized(int sign) const {
    SurgeryPresentation out;
    out.diagram = LinkDiagram(diagram.crossings(), diagram.free_loops() + 1, diagram.name());
    out.framings = framings;
    out.framings.push_back(sign > 0 ? 1 : -1); // free loops are numbered last
    out.name = name;
    return out;
}

SurgeryPresentation disjoint_union(const SurgeryPresentation& a, const SurgeryPresentation& b) {
    // Arc components come before free loops in each factor, so rebuild
    // the framing list in the merged component order.
    SurgeryPresentation out;
    out.diagram = disjoint_union(a.diagram, b.diagram);
    int a_arc_comps = a.diagram.component_count() - a.diagram.free_loops();
    int b_arc_comps = b.diagram.component_count() - b.diagram.free_loops();
    out.framings.insert(out.framings.end(), a.framings.begin(), a.framings.begin() + a_arc_comps);
    out.framings.insert(out.framings.end(), b.framings.begin(), b.framings.begin() + b_arc_comps);
    out.framings.insert(out.framings.end(), a.framings.begin() + a_arc_comps, a.framings.end());
    out.framings.insert(out.framings.end(), b.framings.begin() + b_arc_comps, b.framings.end());
    out.name = a.name.empty() ? b.name : a.name + "+" + b.name;
    out.validate();
    return out;
}

SurgeryPresentation parse_surgery(const std::string& text) {
    SurgeryPresentation p;
    std::istringstream in(text);
    std::string line, diagram_text;
    bool have_framings = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        line = line.substr(b);
        if (line.rfind("framings:", 0) == 0) {
            std::string rest = line.substr(9);
            for (char& ch : rest)
                if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
            std::istringstream fs(rest);
            long f;
            while (fs >> f) p.framings.push_back(f);
            have_framings = true;
        } else if (line.rfind("name:", 0) == 0) {
            size_t s = line.find_first_not_of(" \t", 5);
            p.name = s == std::string::npos ? "" : line.substr(s);
        } else {
            diagram_text += line + "\n";
        }
    }
    p.diagram = parse_diagram(diagram_text);
    if (!have_framings)
        throw ParseError("surgery input needs a 'framings:' line");
    p.validate();
    return p;
}

std::string surgery_string(const SurgeryPresentation& p) {
    std::ostringstream out;
    if (!p.name.empty()) out << "name: " << p.name << "\n";
    out << pd_string(p.diagram) << "\n";
    out << "framings: [";
    for (size_t i = 0; i < p.framings.size(); ++i) {
        if (i) out << ", ";
        out << p.framings[i];
    }
    out << "]\n";
    return out.str();
}

std::vector<std::vector<long>> linking_matrix(const SurgeryPresentation& p) {
    p.validate();
    const int k = p.diagram.component_count();
    std::vector<std::vector<long>> m(k, std::vector<long>(k, 0));
    for (int i = 0; i < k; ++i) m[i][i] = p.framings[i];
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            m[i][j] = m[j][i] = p.diagram.linking_number(i, j);
    return m;
}

int signature(const std::vector<std::vector<long>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw ValidationError("signature: matrix not square");
        for (int j = 0; j < n; ++j) {
            if (m[i][j] != m[j][i])
                throw ValidationError("signature: matrix not symmetric");
            q[i][j] = m[i][j];
        }
    }
    auto swap_rc = [&](int a, int b) {
        std::swap(q[a], q[b]);
        for (int i = 0; i < n; ++i) std::swap(q[i][a], q[i][b]);
    };
    int sig = 0;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (q[i][i] != 0) { pivot = i; break; }
        if (pivot < 0) {
            // hyperbolic block: make a diagonal entry by a congruence
            int bi = -1, bj = -1;
            for (int i = k; i < n && bi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (q[i][j] != 0) { bi = i; bj = j; break; }
            if (bi < 0) break; // remaining block is zero
            for (int t = 0; t < n; ++t) q[bi][t] += q[bj][t];
            for (int t = 0; t < n; ++t) q[t][bi] += q[t][bj];
            pivot = bi;
        }
        if (pivot != k) swap_rc(pivot, k);
        sig += q[k][k] > 0 ? 1 : -1;
        for (int i = k + 1; i < n; ++i) {
            if (q[i][k] == 0) continue;
            mpq_class f = q[i][k] / q[k][k];
            for (int t = 0; t < n; ++t) q[i][t] -= f * q[k][t];
            for (int t = 0; t < n; ++t) q[t][i] -= f * q[t][k];
        }
    }
    return sig;
}

} // namespace qlink
