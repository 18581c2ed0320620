#include "qlink/rt.hpp"

#include "qlink/errors.hpp"
#include "qlink/parallel.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qlink {

RTValue rt_invariant(const SurgeryPresentation& p, const ModularData& md,
                     const RTOptions& opts) {
    p.validate();
    const long k = md.label_count();
    const int c = p.diagram.component_count();
    if (c > 8 && md.level() > 6)
        throw CostLimitError("refusing " + std::to_string(c) + " components at l = " +
                                 std::to_string(md.level()),
                             static_cast<unsigned long long>(std::pow(double(k), double(c))));
    unsigned long long tuples = 1;
    for (int i = 0; i < c; ++i) {
        if (tuples > opts.max_cost / static_cast<unsigned long long>(k) + 1)
            throw CostLimitError("coloring budget exceeded", tuples * k);
        tuples *= static_cast<unsigned long long>(k);
    }
    if (tuples > opts.max_cost)
        throw CostLimitError("coloring budget exceeded", tuples);

    const Cyclotomic zero(md.rc.field);
    Cyclotomic sum =
        c == 0 ? Cyclotomic(md.rc.field, 1)
               : parallel_chunks<Cyclotomic>(
                     tuples, opts.threads, zero,
                     [&](unsigned long long begin, unsigned long long end, int) {
                         Cyclotomic part(md.rc.field);
                         std::vector<long> labels(c);
                         for (unsigned long long t = begin; t < end; ++t) {
                             unsigned long long idx = t;
                             Cyclotomic weight(md.rc.field, 1);
                             for (int i = 0; i < c; ++i) {
                                 labels[i] = static_cast<long>(idx % k) + 1;
                                 idx /= k;
                                 weight *= md.qdim_of(labels[i]);
                             }
                             part += weight * colored_invariant(p.diagram, labels, p.framings,
                                                                md.rc);
                         }
                         return part;
                     },
                     [](Cyclotomic acc, Cyclotomic part) { return acc + part; });

    RTValue out;
    out.sig = signature(linking_matrix(p));
    out.biframed = md.lift(sum) * md.K_inv.pow(c + 1);
    out.corrected = md.C.pow(out.sig) * out.biframed;
    return out;
}

SqrtExt s3_value(const ModularData& md) { return md.K_inv; }

TrivalentSpine caterpillar_spine(int genus) {
    if (genus < 2) throw ValidationError("caterpillar spine needs genus >= 2");
    TrivalentSpine sp;
    int next_edge = 0;
    int left_loop = next_edge++;
    int bridge = next_edge++;
    sp.vertices.push_back({left_loop, left_loop, bridge});
    for (int h = 0; h < genus - 2; ++h) {
        int p = next_edge++, q = next_edge++, nb = next_edge++;
        sp.vertices.push_back({bridge, p, q});
        sp.vertices.push_back({p, q, nb});
        bridge = nb;
    }
    int right_loop = next_edge++;
    sp.vertices.push_back({right_loop, right_loop, bridge});
    sp.edge_count = next_edge;
    return sp;
}

TrivalentSpine theta_spine(int genus) {
    TrivalentSpine sp;
    if (genus == 2) {
        sp.vertices = {{0, 1, 2}, {0, 1, 2}};
        sp.edge_count = 3;
    } else if (genus == 3) {
        sp.vertices = {{0, 1, 2}, {0, 1, 3}, {3, 4, 5}, {4, 5, 2}};
        sp.edge_count = 6;
    } else {
        throw ValidationError("theta spine defined for genus 2 and 3");
    }
    return sp;
}

long spine_labelings(const TrivalentSpine& spine, const ModularData& md) {
    const long k = md.label_count();
    if (spine.edge_count > 12)
        throw CostLimitError("spine too large", static_cast<unsigned long long>(
                                                    std::pow(double(k), double(spine.edge_count))));
    std::vector<long> label(spine.edge_count, 0);
    long count = 0;
    // odometer over edge labelings
    while (true) {
        bool ok = true;
        for (const auto& v : spine.vertices) {
            if (!md.fusion_mult[label[v[0]]][label[v[1]]][label[v[2]]]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int pos = 0;
        while (pos < spine.edge_count && ++label[pos] == k) label[pos++] = 0;
        if (pos == spine.edge_count) break;
    }
    return count;
}

long tqft_dim(int genus, const ModularData& md) {
    if (genus < 0) throw ValidationError("genus must be nonnegative");
    if (genus == 0) return 1;
    if (genus == 1) return md.label_count();
    return spine_labelings(caterpillar_spine(genus), md);
}

bool KirbyReport::all_passed() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

std::string KirbyReport::summary() const {
    std::ostringstream out;
    for (const auto& [name, ok] : checks)
        out << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    return out.str();
}

KirbyReport kirby_invariance_suite(const ModularData& md,
                                   const std::vector<SurgeryPresentation>& corpus,
                                   const std::vector<SlidePair>& slide_pairs,
                                   const RTOptions& opts) {
    KirbyReport rep;
    for (const auto& p : corpus) {
        RTValue base = rt_invariant(p, md, opts);
        bool ok = rt_invariant(p.stabilized(+1), md, opts).corrected == base.corrected &&
                  rt_invariant(p.stabilized(-1), md, opts).corrected == base.corrected;
        std::string label = p.name.empty() ? surgery_string(p) : p.name;
        rep.checks.emplace_back("stabilization: " + label, ok);
    }
    for (const auto& pair : slide_pairs) {
        if (pair.max_level && md.level() > pair.max_level) continue;
        bool ok = rt_invariant(pair.before, md, opts).corrected ==
                  rt_invariant(pair.after, md, opts).corrected;
        rep.checks.emplace_back("slide pair: " + pair.before.name + " ~ " + pair.after.name, ok);
    }
    {
        // negative control: a framing change without correction must move
        // the value (the twist factor is not 1)
        SurgeryPresentation u0{LinkDiagram({}, 1), {0}, "U0"};
        SurgeryPresentation u1{LinkDiagram({}, 1), {1}, "U1"};
        bool differs = rt_invariant(u0, md, opts).corrected != rt_invariant(u1, md, opts).corrected;
        rep.checks.emplace_back("negative control: framing change moves the value", differs);
    }
    return rep;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> manifest_lines(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok, joined;
        while (ls >> tok) joined += (joined.empty() ? "" : " ") + tok;
        if (!joined.empty()) lines.push_back(joined);
    }
    return lines;
}

} // namespace

std::vector<SurgeryPresentation> load_corpus(const std::string& dir) {
    std::vector<SurgeryPresentation> out;
    for (const auto& name : manifest_lines(dir + "/corpus.txt"))
        out.push_back(parse_surgery(read_file(dir + "/" + name)));
    return out;
}

std::vector<SlidePair> load_slide_pairs(const std::string& dir) {
    std::vector<SlidePair> out;
    for (const auto& line : manifest_lines(dir + "/slide_pairs.txt")) {
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a >> b))
            throw ValidationError("slide_pairs.txt lines need two file names");
        SlidePair pair;
        pair.before = parse_surgery(read_file(dir + "/" + a));
        pair.after = parse_surgery(read_file(dir + "/" + b));
        ls >> pair.max_level; // optional third field
        out.push_back(std::move(pair));
    }
    return out;
}

} // namespace qlink
