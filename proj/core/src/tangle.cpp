#include "qlink/tangle.hpp"

#include "qlink/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qlink {

int Gen::arity_in() const {
    switch (kind) {
    case GenKind::Over:
    case GenKind::Under: return 2;
    case GenKind::Cup: return 0;
    case GenKind::Cap: return 2;
    case GenKind::Id: return 1;
    case GenKind::Coupon: return coupon_in;
    }
    return 0;
}

int Gen::arity_out() const {
    switch (kind) {
    case GenKind::Over:
    case GenKind::Under: return 2;
    case GenKind::Cup: return 2;
    case GenKind::Cap: return 0;
    case GenKind::Id: return 1;
    case GenKind::Coupon: return coupon_out;
    }
    return 0;
}

int TangleWord::max_width() const {
    int w = 0;
    for (const auto& lvl : levels) w = std::max(w, static_cast<int>(lvl.size()));
    return w;
}

void TangleWord::validate() const {
    if (levels.size() != slices.size() + 1)
        throw ValidationError("tangle word: level count does not match slice count");
    for (size_t k = 0; k < slices.size(); ++k) {
        int in = 0, out = 0;
        for (const auto& g : slices[k]) {
            in += g.arity_in();
            out += g.arity_out();
        }
        if (in != static_cast<int>(levels[k].size()) ||
            out != static_cast<int>(levels[k + 1].size()))
            throw ValidationError("tangle word: arity mismatch at slice " + std::to_string(k));
    }
}

namespace {

/// A strand on the sweep front, traveling upward toward `target` along
/// `arc`.  `up` records whether the travel direction agrees with the
/// arc's orientation.
struct Token {
    int arc;
    ArcEnd target;
    bool up;
};

class Slicer {
public:
    explicit Slicer(const LinkDiagram& d) : d_(d), built_(d.crossings().size(), false) {}

    TangleWord run() {
        word_.levels.push_back({});
        for (int k = 0; k < d_.free_loops(); ++k) {
            // a crossingless loop is a minimum followed by a maximum
            int comp = d_.component_count() - d_.free_loops() + k;
            emit_cup_tokens(0, Token{-1, {}, true}, Token{-1, {}, false}, comp);
            front_size_before_ = front_.size();
            front_.erase(front_.begin(), front_.begin() + 2);
            emit_slice(0, {GenKind::Cap}, 2, 0);
        }
        size_t guard = 0;
        const size_t guard_limit = 16 * (d_.crossings().size() + 2) * (d_.arcs().size() + 2) + 64;
        while (!done()) {
            if (++guard > guard_limit)
                throw ValidationError("tangle slicing did not terminate on '" + pd_string(d_) + "'");
            if (try_cap()) continue;
            if (try_attach()) continue;
            if (try_half_attach()) continue;
            if (try_seed()) continue;
            throw ValidationError("tangle slicing is stuck on '" + pd_string(d_) + "'");
        }
        return std::move(word_);
    }

private:
    bool done() const {
        return front_.empty() &&
               std::all_of(built_.begin(), built_.end(), [](bool b) { return b; });
    }

    ArcEnd other_end(int arc, const ArcEnd& e) const {
        ArcEnd t = d_.tail(arc), h = d_.head(arc);
        return t == e ? h : t;
    }

    bool token_up(int arc, const ArcEnd& target) const { return d_.head(arc) == target; }

    void snapshot_level() {
        std::vector<StrandInfo> lvl;
        lvl.reserve(front_.size());
        for (const auto& t : front_)
            lvl.push_back({t.arc < 0 ? t.free_component : d_.component_of_arc(t.arc), t.up});
        word_.levels.push_back(std::move(lvl));
    }

    struct FrontToken : Token {
        int free_component = -1;
    };

    void emit_slice(size_t pos, Gen gen, int consume, int produce_ignored) {
        (void)produce_ignored;
        std::vector<Gen> slice;
        for (size_t i = 0; i < pos; ++i) slice.push_back({GenKind::Id});
        slice.push_back(gen);
        for (size_t i = pos + consume; i < front_size_before_; ++i) slice.push_back({GenKind::Id});
        word_.slices.push_back(std::move(slice));
        snapshot_level();
    }

    void emit_cup_tokens(size_t pos, Token left, Token right, int free_component = -1) {
        front_size_before_ = front_.size();
        FrontToken l, r;
        static_cast<Token&>(l) = left;
        static_cast<Token&>(r) = right;
        l.free_component = free_component;
        r.free_component = free_component;
        front_.insert(front_.begin() + pos, {l, r});
        emit_slice(pos, {GenKind::Cup}, 0, 2);
    }

    bool targets_built(const FrontToken& t) const {
        return t.arc < 0 || built_[t.target.crossing];
    }

    bool try_cap() {
        for (size_t p = 0; p + 1 < front_.size(); ++p) {
            const auto& a = front_[p];
            const auto& b = front_[p + 1];
            bool free_pair = a.arc < 0 && b.arc < 0 && a.free_component == b.free_component;
            bool arc_pair = a.arc >= 0 && a.arc == b.arc && targets_built(a) && targets_built(b);
            if (!free_pair && !arc_pair) continue;
            front_size_before_ = front_.size();
            front_.erase(front_.begin() + p, front_.begin() + p + 2);
            emit_slice(p, {GenKind::Cap}, 2, 0);
            return true;
        }
        return false;
    }

    // Positions of the token targeting `e`, or -1.
    long find_target(const ArcEnd& e) const {
        for (size_t p = 0; p < front_.size(); ++p)
            if (front_[p].arc >= 0 && front_[p].target == e) return static_cast<long>(p);
        return -1;
    }

    bool has_arc_token(int arc) const {
        for (const auto& t : front_)
            if (t.arc == arc) return true;
        return false;
    }

    void build_crossing(int c, int r, size_t pos) {
        const auto& arcs = d_.crossings()[c].arc;
        built_[c] = true;
        front_size_before_ = front_.size();
        // bottom-left is slot r; the strand bottom-left -> top-right is
        // the under-path {0,2} exactly when r is even
        Gen gen{r % 2 == 0 ? GenKind::Under : GenKind::Over};
        int tl = (r + 3) % 4, tr = (r + 2) % 4;
        FrontToken left, right;
        left.arc = arcs[tl];
        left.target = other_end(arcs[tl], {c, tl});
        left.up = token_up(arcs[tl], left.target);
        right.arc = arcs[tr];
        right.target = other_end(arcs[tr], {c, tr});
        right.up = token_up(arcs[tr], right.target);
        front_[pos] = left;
        front_[pos + 1] = right;
        emit_slice(pos, gen, 2, 2);
    }

    bool try_attach() {
        for (int c = 0; c < static_cast<int>(built_.size()); ++c) {
            if (built_[c]) continue;
            const auto& arcs = d_.crossings()[c].arc;
            for (int r = 0; r < 4; ++r) {
                long p = find_target({c, r});
                if (p < 0 || p + 1 >= static_cast<long>(front_.size())) continue;
                if (front_[p + 1].arc == arcs[(r + 1) % 4] &&
                    front_[p + 1].target == ArcEnd{c, (r + 1) % 4}) {
                    build_crossing(c, r, p);
                    return true;
                }
            }
        }
        return false;
    }

    bool try_half_attach() {
        for (int c = 0; c < static_cast<int>(built_.size()); ++c) {
            if (built_[c]) continue;
            const auto& arcs = d_.crossings()[c].arc;
            for (int r = 0; r < 4; ++r) {
                ArcEnd in1{c, r}, in2{c, (r + 1) % 4};
                long p1 = find_target(in1), p2 = find_target(in2);
                if (p1 >= 0 && p2 < 0) {
                    int v = arcs[in2.slot];
                    if (has_arc_token(v)) continue;
                    Token a{v, in2, token_up(v, in2)};
                    ArcEnd vo = other_end(v, in2);
                    Token b{v, vo, token_up(v, vo)};
                    emit_cup_tokens(p1 + 1, a, b);
                    build_crossing(c, r, p1);
                    return true;
                }
                if (p2 >= 0 && p1 < 0) {
                    int u = arcs[in1.slot];
                    if (has_arc_token(u)) continue;
                    ArcEnd uo = other_end(u, in1);
                    Token a{u, uo, token_up(u, uo)};
                    Token b{u, in1, token_up(u, in1)};
                    emit_cup_tokens(p2, a, b);
                    build_crossing(c, r, p2 + 1);
                    return true;
                }
            }
        }
        return false;
    }

    bool try_seed() {
        for (int c = 0; c < static_cast<int>(built_.size()); ++c) {
            if (built_[c]) continue;
            const auto& arcs = d_.crossings()[c].arc;
            // kink-style rotations (both inputs on one arc) seed with a
            // single minimum
            for (int r = 0; r < 4; ++r) {
                ArcEnd in1{c, r}, in2{c, (r + 1) % 4};
                int u = arcs[in1.slot], v = arcs[in2.slot];
                if (u != v) continue;
                if (has_arc_token(u)) continue;
                if (!(other_end(u, in1) == in2)) continue;
                size_t pos = front_.size();
                emit_cup_tokens(pos, Token{u, in1, token_up(u, in1)},
                                Token{u, in2, token_up(u, in2)});
                build_crossing(c, r, pos);
                return true;
            }
            for (int r = 0; r < 4; ++r) {
                ArcEnd in1{c, r}, in2{c, (r + 1) % 4};
                int u = arcs[in1.slot], v = arcs[in2.slot];
                if (u == v || has_arc_token(u) || has_arc_token(v)) continue;
                size_t pos = front_.size();
                ArcEnd uo = other_end(u, in1), vo = other_end(v, in2);
                emit_cup_tokens(pos, Token{u, uo, token_up(u, uo)},
                                Token{u, in1, token_up(u, in1)});
                emit_cup_tokens(pos + 2, Token{v, in2, token_up(v, in2)},
                                Token{v, vo, token_up(v, vo)});
                build_crossing(c, r, pos + 1);
                return true;
            }
        }
        return false;
    }

    const LinkDiagram& d_;
    std::vector<bool> built_;
    std::vector<FrontToken> front_;
    size_t front_size_before_ = 0;
    TangleWord word_;
};

} // namespace

TangleWord to_tangle_word(const LinkDiagram& d) {
    TangleWord w = Slicer(d).run();
    w.validate();
    return w;
}

TangleWord parse_tangle_dsl(const std::string& text) {
    TangleWord w;
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Gen>> slices;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<Gen> slice;
        std::string tok;
        std::istringstream ls(line);
        std::string piece;
        while (std::getline(ls, piece, ',')) {
            size_t b = piece.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            size_t e = piece.find_last_not_of(" \t\r");
            tok = piece.substr(b, e - b + 1);
            if (tok == "over") slice.push_back({GenKind::Over});
            else if (tok == "under") slice.push_back({GenKind::Under});
            else if (tok == "cup") slice.push_back({GenKind::Cup});
            else if (tok == "cap") slice.push_back({GenKind::Cap});
            else if (tok == "id") slice.push_back({GenKind::Id});
            else if (tok.rfind("coupon(", 0) == 0 && tok.back() == ')') {
                std::string inner = tok.substr(7, tok.size() - 8);
                std::istringstream cs(inner);
                Gen g{GenKind::Coupon};
                std::string name, a, b2;
                if (!std::getline(cs, name, ';'))
                    throw ParseError("coupon needs name;in;out");
                if (!std::getline(cs, a, ';') || !std::getline(cs, b2, ';'))
                    throw ParseError("coupon needs name;in;out");
                g.coupon = name;
                g.coupon_in = std::stoi(a);
                g.coupon_out = std::stoi(b2);
                slice.push_back(g);
            } else {
                throw ParseError("unknown tangle generator '" + tok + "'");
            }
        }
        if (!slice.empty()) slices.push_back(std::move(slice));
    }
    w.slices = std::move(slices);
    // derive levels; strand metadata defaults to anonymous upward strands
    int width = 0;
    w.levels.push_back({});
    for (const auto& slice : w.slices) {
        int in = 0, out = 0;
        for (const auto& g : slice) {
            in += g.arity_in();
            out += g.arity_out();
        }
        if (in != width && !w.levels.empty() && w.levels.size() > 1)
            throw ValidationError("tangle DSL: arity mismatch at slice " +
                                  std::to_string(w.levels.size() - 1));
        if (w.levels.size() == 1 && in != 0) {
            w.levels.front().assign(in, StrandInfo{});
        } else if (in != width) {
            throw ValidationError("tangle DSL: arity mismatch at slice " +
                                  std::to_string(w.levels.size() - 1));
        }
        width = out;
        w.levels.push_back(std::vector<StrandInfo>(out, StrandInfo{}));
    }
    w.validate();
    return w;
}

std::string tangle_dsl_string(const TangleWord& w) {
    std::ostringstream out;
    for (const auto& slice : w.slices) {
        bool first = true;
        for (const auto& g : slice) {
            if (!first) out << ", ";
            first = false;
            switch (g.kind) {
            case GenKind::Over: out << "over"; break;
            case GenKind::Under: out << "under"; break;
            case GenKind::Cup: out << "cup"; break;
            case GenKind::Cap: out << "cap"; break;
            case GenKind::Id: out << "id"; break;
            case GenKind::Coupon:
                out << "coupon(" << g.coupon << ";" << g.coupon_in << ";" << g.coupon_out << ")";
                break;
            }
        }
        out << "\n";
    }
    return out.str();
}

} // namespace qlink
