#include "knotlib/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotlib {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // returns true if the two were in distinct classes
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

// incoming arc slots of a crossing: under enters at 0; over enters at 3 for
// positive crossings and at 1 for negative ones
inline std::array<int, 2> in_slots(int sign) {
    return {0, sign > 0 ? 3 : 1};
}
inline std::array<int, 2> out_slots(int sign) {
    return {2, sign > 0 ? 1 : 3};
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    validate();
}

void Diagram::validate() const {
    std::map<int, int> count;
    std::map<int, int> in_count, out_count;
    for (const auto& c : crossings_) {
        if (c.sign != 1 && c.sign != -1)
            throw std::invalid_argument("crossing sign must be +1 or -1");
        for (int s = 0; s < 4; ++s) count[c.arc[s]]++;
        for (int s : in_slots(c.sign)) in_count[c.arc[s]]++;
        for (int s : out_slots(c.sign)) out_count[c.arc[s]]++;
    }
    for (const auto& [arc, n] : count)
        if (n != 2)
            throw std::invalid_argument("arc " + std::to_string(arc) +
                                        " occurs " + std::to_string(n) + " times");
    for (const auto& [arc, n] : in_count)
        if (n != 1 || out_count[arc] != 1)
            throw std::invalid_argument("inconsistent orientation at arc " +
                                        std::to_string(arc));
    if (free_loops_ < 0) throw std::invalid_argument("negative free loop count");
}

int Diagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
}

std::vector<std::vector<int>> Diagram::component_cycles() const {
    // successor along the orientation: arc entering a crossing continues as
    // the outgoing arc of the same strand
    std::map<int, int> succ;
    for (const auto& c : crossings_) {
        succ[c.arc[0]] = c.arc[2];
        if (c.sign > 0)
            succ[c.arc[3]] = c.arc[1];
        else
            succ[c.arc[1]] = c.arc[3];
    }
    std::vector<std::vector<int>> cycles;
    std::set<int> seen;
    for (const auto& [start, next] : succ) {
        if (seen.count(start)) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            cyc.push_back(x);
            seen.insert(x);
            x = succ.at(x);
        } while (x != start);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

int Diagram::components() const {
    return static_cast<int>(component_cycles().size()) + free_loops_;
}

Diagram Diagram::from_braid(const std::vector<int>& word, int strands) {
    if (strands < 1) throw std::invalid_argument("strands must be >= 1");
    for (int letter : word)
        if (letter == 0 || std::abs(letter) >= strands)
            throw std::invalid_argument("braid letter out of range");

    int next_arc = 0;
    std::vector<int> top(strands), cur(strands);
    for (int i = 0; i < strands; ++i) top[i] = cur[i] = next_arc++;

    std::vector<Crossing> cs;
    std::vector<bool> touched(strands, false);
    for (int letter : word) {
        int i = std::abs(letter) - 1;
        touched[i] = touched[i + 1] = true;
        int u = next_arc++, v = next_arc++;
        if (letter > 0)
            cs.push_back({{cur[i], u, v, cur[i + 1]}, +1});
        else
            cs.push_back({{cur[i + 1], cur[i], u, v}, -1});
        cur[i] = u;
        cur[i + 1] = v;
    }
    // close the braid: identify each strand's bottom arc with its top arc
    std::map<int, int> rename;
    int loops = 0;
    for (int i = 0; i < strands; ++i) {
        if (!touched[i]) {
            ++loops;
            continue;
        }
        rename[top[i]] = cur[i];
    }
    for (auto& c : cs)
        for (int s = 0; s < 4; ++s) {
            auto it = rename.find(c.arc[s]);
            if (it != rename.end()) c.arc[s] = it->second;
        }
    return Diagram(std::move(cs), loops);
}

namespace {

// Geometric crossing: four ports counterclockwise in the fixed order
// NW, SW, SE, NE; over_diag picks the over-strand diagonal, 0 for the
// NW-SE strand and 1 for the SW-NE strand.
struct GeoCrossing {
    std::array<int, 4> port;  // union-find node per port
    int over_diag;
};
constexpr int kNW = 0, kSW = 1, kSE = 2, kNE = 3;

class PortGraph {
  public:
    int node() {
        adj_.emplace_back();
        return static_cast<int>(adj_.size()) - 1;
    }
    GeoCrossing& crossing(int over_diag) {
        GeoCrossing g;
        for (int s = 0; s < 4; ++s) {
            g.port[s] = node();
            port_of_[g.port[s]] = {static_cast<int>(cs_.size()), s};
        }
        g.over_diag = over_diag;
        cs_.push_back(g);
        return cs_.back();
    }
    void join(int x, int y) {
        adj_[x].push_back(y);
        adj_[y].push_back(x);
    }

    // Resolve chains of joins into arcs, orient every component by
    // traversal, and emit the PD code.
    Diagram finish() {
        for (size_t n = 0; n < adj_.size(); ++n) {
            size_t want = port_of_.count(static_cast<int>(n)) ? 1 : 2;
            if (adj_[n].size() != want)
                throw std::invalid_argument("malformed tangle wiring");
        }
        // walk from each port to the next port through virtual nodes
        std::map<int, int> mate;  // port -> port across one arc
        int free_loops = 0;
        std::vector<bool> seen(adj_.size(), false);
        for (size_t n = 0; n < adj_.size(); ++n) {
            if (seen[n] || !port_of_.count(static_cast<int>(n))) continue;
            int prev = static_cast<int>(n), x = adj_[n][0];
            seen[n] = true;
            while (!port_of_.count(x)) {
                seen[x] = true;
                int nxt = (adj_[x][0] == prev) ? adj_[x][1] : adj_[x][0];
                prev = x;
                x = nxt;
            }
            seen[x] = true;
            mate[static_cast<int>(n)] = x;
            mate[x] = static_cast<int>(n);
        }
        // leftover virtual-only cycles are crossingless components
        for (size_t n = 0; n < adj_.size(); ++n) {
            if (seen[n] || port_of_.count(static_cast<int>(n))) continue;
            int prev = static_cast<int>(n), x = adj_[n][0];
            seen[n] = true;
            while (x != static_cast<int>(n)) {
                seen[x] = true;
                int nxt = (adj_[x][0] == prev) ? adj_[x][1] : adj_[x][0];
                prev = x;
                x = nxt;
            }
            ++free_loops;
        }

        // assign arc ids
        std::map<int, int> arc_of;  // port -> arc id
        int next_arc = 0;
        for (const auto& [p, q] : mate)
            if (!arc_of.count(p)) {
                arc_of[p] = next_arc;
                arc_of[q] = next_arc;
                ++next_arc;
            }

        // orient: exiting crossing c at slot s, the strand enters the mate
        // port's crossing, and continues out through the opposite slot
        std::map<int, bool> entry;  // port -> strand enters here
        for (const auto& [p0, q0] : mate) {
            if (entry.count(p0)) continue;
            int exit_port = p0;
            while (!entry.count(exit_port)) {
                entry[exit_port] = false;
                int in_port = mate.at(exit_port);
                entry[in_port] = true;
                auto [ci, si] = port_of_.at(in_port);
                exit_port = cs_[ci].port[(si + 2) % 4];
            }
        }

        std::vector<Crossing> out;
        for (const auto& g : cs_) {
            int under0 = g.over_diag == 0 ? kSW : kNW;  // one under end
            int a_slot = entry.at(g.port[under0]) ? under0 : (under0 + 2) % 4;
            int over_in = -1;
            for (int s = (a_slot + 1) % 4;; s = (s + 2) % 4) {
                if (entry.at(g.port[s])) {
                    over_in = s;
                    break;
                }
            }
            int rel = (over_in - a_slot + 4) % 4;
            int sign = (rel == 3) ? +1 : -1;
            Crossing c;
            c.sign = sign;
            for (int s = 0; s < 4; ++s) c.arc[s] = arc_of.at(g.port[(a_slot + s) % 4]);
            out.push_back(c);
        }
        return Diagram(std::move(out), free_loops);
    }

  private:
    std::vector<std::vector<int>> adj_;
    std::map<int, std::pair<int, int>> port_of_;  // node -> (crossing, slot)
    std::vector<GeoCrossing> cs_;
};

}  // namespace

Diagram Diagram::pretzel(int p1, int p2, int p3) {
    PortGraph pg;
    std::array<int, 3> params = {p1, p2, p3};
    std::array<int, 3> tl{}, tr{}, bl{}, br{};
    for (int band = 0; band < 3; ++band) {
        int k = std::abs(params[band]);
        int over_diag = params[band] > 0 ? 1 : 0;  // positive: SW-NE over
        if (k == 0) {
            int l = pg.node(), r = pg.node();
            tl[band] = bl[band] = l;
            tr[band] = br[band] = r;
            continue;
        }
        std::vector<GeoCrossing> col;
        int prev_sw = -1, prev_se = -1;
        for (int j = 0; j < k; ++j) {
            GeoCrossing& g = pg.crossing(over_diag);
            if (j == 0) {
                tl[band] = g.port[kNW];
                tr[band] = g.port[kNE];
            } else {
                pg.join(prev_sw, g.port[kNW]);
                pg.join(prev_se, g.port[kNE]);
            }
            prev_sw = g.port[kSW];
            prev_se = g.port[kSE];
        }
        bl[band] = prev_sw;
        br[band] = prev_se;
    }
    for (int band = 0; band < 3; ++band) {
        pg.join(tr[band], tl[(band + 1) % 3]);
        pg.join(br[band], bl[(band + 1) % 3]);
    }
    return pg.finish();
}

Diagram Diagram::rational(const std::vector<int>& twists) {
    // The list is the continued fraction a1 + 1/(a2 + 1/(...)). Twisting
    // builds innermost-first and must end on a horizontal twist before the
    // closure, so even-length lists are rewritten [..., x] -> [..., x-1, 1]
    // and the whole list is reversed.
    std::vector<int> seq = twists;
    if (seq.size() % 2 == 0 && !seq.empty()) {
        int x = seq.back();
        seq.back() = x - 1;
        seq.push_back(1);
    }
    std::reverse(seq.begin(), seq.end());

    PortGraph pg;
    // 0-tangle: two horizontal strands
    int nw = pg.node(), ne = pg.node(), sw = pg.node(), se = pg.node();
    int a = pg.node(), b = pg.node();
    pg.join(nw, a);
    pg.join(a, ne);
    pg.join(sw, b);
    pg.join(b, se);
    bool horizontal = true;
    for (int t : seq) {
        int k = std::abs(t);
        for (int i = 0; i < k; ++i) {
            if (horizontal) {
                // crossing appended on the right side
                GeoCrossing& g = pg.crossing(t > 0 ? 1 : 0);
                pg.join(ne, g.port[kNW]);
                pg.join(se, g.port[kSW]);
                ne = g.port[kNE];
                se = g.port[kSE];
            } else {
                // crossing appended below
                GeoCrossing& g = pg.crossing(t > 0 ? 1 : 0);
                pg.join(sw, g.port[kNW]);
                pg.join(se, g.port[kNE]);
                sw = g.port[kSW];
                se = g.port[kSE];
            }
        }
        horizontal = !horizontal;
    }
    // numerator closure
    int top = pg.node(), bot = pg.node();
    pg.join(nw, top);
    pg.join(top, ne);
    pg.join(sw, bot);
    pg.join(bot, se);
    return pg.finish();
}

Diagram Diagram::from_pd(const std::vector<std::array<int, 4>>& tuples,
                         const std::vector<int>& signs) {
    if (!signs.empty() && signs.size() != tuples.size())
        throw std::invalid_argument("sign count mismatch");
    size_t n = tuples.size();
    std::vector<int> sgn(n, 0);
    for (size_t i = 0; i < signs.size(); ++i) sgn[i] = signs[i];

    // Over-strand directions: infer by propagating the requirement that each
    // arc is outgoing at exactly one end and incoming at the other. Under
    // strands run slot0 -> slot2.
    std::map<int, std::vector<std::pair<int, int>>> occ;  // arc -> (crossing, slot)
    for (size_t i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) occ[tuples[i][s]].push_back({(int)i, s});
    for (auto& [arc, v] : occ)
        if (v.size() != 2)
            throw std::invalid_argument("arc " + std::to_string(arc) +
                                        " does not occur exactly twice");

    // status per (crossing, slot): +1 incoming, -1 outgoing, 0 unknown
    std::vector<std::array<int, 4>> st(n, {0, 0, 0, 0});
    std::vector<std::pair<int, int>> queue;
    auto set_status = [&](int ci, int si, int v) {
        if (st[ci][si] == v) return;
        if (st[ci][si] != 0) throw std::invalid_argument("PD orientation conflict");
        st[ci][si] = v;
        queue.push_back({ci, si});
    };
    for (size_t i = 0; i < n; ++i) {
        set_status(i, 0, +1);
        set_status(i, 2, -1);
        if (sgn[i] == +1) {
            set_status(i, 3, +1);
            set_status(i, 1, -1);
        } else if (sgn[i] == -1) {
            set_status(i, 1, +1);
            set_status(i, 3, -1);
        }
    }
    auto propagate_all = [&]() {
        while (!queue.empty()) {
            auto [ci, si] = queue.back();
            queue.pop_back();
            int arc = tuples[ci][si];
            for (auto [cj, sj] : occ[arc])
                if (cj != ci || sj != si) set_status(cj, sj, -st[ci][si]);
            // over-strand slots 1 and 3 carry one in and one out
            if (si == 1 || si == 3) set_status(ci, 4 - si, -st[ci][si]);
        }
    };
    propagate_all();
    for (size_t i = 0; i < n; ++i)
        if (st[i][1] == 0) {
            // an all-over component with no forced direction; either works
            set_status(i, 1, +1);
            propagate_all();
        }

    std::vector<Crossing> cs(n);
    for (size_t i = 0; i < n; ++i) {
        int s = st[i][3] == +1 ? +1 : -1;
        if (sgn[i] != 0 && sgn[i] != s)
            throw std::invalid_argument("PD sign annotation inconsistent");
        cs[i] = {tuples[i], s};
    }
    return Diagram(std::move(cs), 0);
}

Diagram Diagram::mirror() const {
    std::vector<Crossing> cs;
    cs.reserve(crossings_.size());
    for (const auto& c : crossings_) {
        const auto& a = c.arc;
        if (c.sign > 0)
            cs.push_back({{a[3], a[0], a[1], a[2]}, -1});
        else
            cs.push_back({{a[1], a[2], a[3], a[0]}, +1});
    }
    return Diagram(std::move(cs), free_loops_);
}

Diagram Diagram::switch_crossing(size_t k) const {
    std::vector<Crossing> cs = crossings_;
    const auto& a = cs.at(k).arc;
    if (cs[k].sign > 0)
        cs[k] = {{a[3], a[0], a[1], a[2]}, -1};
    else
        cs[k] = {{a[1], a[2], a[3], a[0]}, +1};
    return Diagram(std::move(cs), free_loops_);
}

Diagram Diagram::smooth_crossing(size_t k) const {
    const Crossing& c = crossings_.at(k);
    // oriented smoothing joins incoming under to over-out, over-in to
    // under-out: +: (a0,a1),(a3,a2); -: (a0,a3),(a1,a2)
    std::array<std::pair<int, int>, 2> joins;
    if (c.sign > 0)
        joins = {{{c.arc[0], c.arc[1]}, {c.arc[3], c.arc[2]}}};
    else
        joins = {{{c.arc[0], c.arc[3]}, {c.arc[1], c.arc[2]}}};

    std::vector<Crossing> cs;
    for (size_t i = 0; i < crossings_.size(); ++i)
        if (i != k) cs.push_back(crossings_[i]);

    int loops = free_loops_;
    std::map<int, int> rename;
    auto resolve = [&](int x) {
        while (rename.count(x)) x = rename[x];
        return x;
    };
    for (auto [x, y] : joins) {
        x = resolve(x);
        y = resolve(y);
        if (x == y)
            ++loops;
        else
            rename[x] = y;
    }
    for (auto& cc : cs)
        for (int s = 0; s < 4; ++s) cc.arc[s] = resolve(cc.arc[s]);
    return Diagram(std::move(cs), loops);
}

std::vector<int> Diagram::canonical_key() const {
    // cluster crossings by shared arcs
    size_t n = crossings_.size();
    std::map<int, std::vector<int>> by_arc;
    for (size_t i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) by_arc[crossings_[i].arc[s]].push_back(i);
    UnionFind uf(n ? n : 1);
    for (auto& [arc, v] : by_arc)
        for (size_t i = 1; i < v.size(); ++i) uf.unite(v[0], v[i]);

    std::map<int, std::vector<int>> clusters;
    for (size_t i = 0; i < n; ++i) clusters[uf.find(i)].push_back(i);

    std::map<int, int> succ;
    for (const auto& c : crossings_) {
        succ[c.arc[0]] = c.arc[2];
        if (c.sign > 0)
            succ[c.arc[3]] = c.arc[1];
        else
            succ[c.arc[1]] = c.arc[3];
    }

    std::vector<std::vector<int>> cluster_keys;
    for (const auto& [root, members] : clusters) {
        std::set<int> cluster_arcs;
        for (int ci : members)
            for (int s = 0; s < 4; ++s) cluster_arcs.insert(crossings_[ci].arc[s]);

        std::vector<int> best;
        for (int start : cluster_arcs) {
            // relabel arcs by traversal order starting from `start`
            std::map<int, int> label;
            int next = 0;
            int cur = start;
            while (!label.count(cur)) {
                label[cur] = next++;
                cur = succ.at(cur);
            }
            while (label.size() < cluster_arcs.size()) {
                // next component: the unlabeled arc at the crossing carrying
                // the smallest label, smallest slot first
                int pick = -1, best_rank = -1;
                for (int ci : members) {
                    int mn = -1;
                    for (int s = 0; s < 4; ++s) {
                        auto it = label.find(crossings_[ci].arc[s]);
                        if (it != label.end() && (mn < 0 || it->second < mn))
                            mn = it->second;
                    }
                    if (mn < 0) continue;
                    for (int s = 0; s < 4; ++s) {
                        int arc = crossings_[ci].arc[s];
                        if (label.count(arc)) continue;
                        int rank = mn * 8 + s;
                        if (pick < 0 || rank < best_rank) {
                            pick = arc;
                            best_rank = rank;
                        }
                    }
                }
                if (pick < 0) throw std::logic_error("cluster not connected");
                cur = pick;
                while (!label.count(cur)) {
                    label[cur] = next++;
                    cur = succ.at(cur);
                }
            }
            std::vector<std::array<int, 5>> enc;
            for (int ci : members) {
                const auto& c = crossings_[ci];
                enc.push_back({label[c.arc[0]], label[c.arc[1]], label[c.arc[2]],
                               label[c.arc[3]], c.sign});
            }
            std::sort(enc.begin(), enc.end());
            std::vector<int> flat;
            for (const auto& e : enc) flat.insert(flat.end(), e.begin(), e.end());
            if (best.empty() || flat < best) best = std::move(flat);
        }
        cluster_keys.push_back(std::move(best));
    }
    std::sort(cluster_keys.begin(), cluster_keys.end());
    std::vector<int> key;
    key.push_back(free_loops_);
    for (const auto& ck : cluster_keys) {
        key.push_back(static_cast<int>(ck.size()));
        key.insert(key.end(), ck.begin(), ck.end());
    }
    return key;
}

std::string Diagram::pd_str() const {
    std::ostringstream os;
    for (size_t i = 0; i < crossings_.size(); ++i) {
        const auto& c = crossings_[i];
        if (i) os << ", ";
        os << 'X' << (c.sign > 0 ? '+' : '-') << '(' << c.arc[0] << ',' << c.arc[1]
           << ',' << c.arc[2] << ',' << c.arc[3] << ')';
    }
    if (crossings_.empty()) os << "unknot";
    for (int i = 0; i < free_loops_; ++i) os << " O";
    return os.str();
}

SeifertStats seifert_stats(const Diagram& d) {
    SeifertStats st;
    st.writhe = d.writhe();

    std::map<int, int> arc_ix;
    for (const auto& c : d.crossings())
        for (int s = 0; s < 4; ++s)
            if (!arc_ix.count(c.arc[s])) {
                int k = static_cast<int>(arc_ix.size());
                arc_ix[c.arc[s]] = k;
            }
    UnionFind uf(arc_ix.empty() ? 1 : static_cast<int>(arc_ix.size()));
    for (const auto& c : d.crossings()) {
        if (c.sign > 0) {
            uf.unite(arc_ix[c.arc[0]], arc_ix[c.arc[1]]);
            uf.unite(arc_ix[c.arc[3]], arc_ix[c.arc[2]]);
        } else {
            uf.unite(arc_ix[c.arc[0]], arc_ix[c.arc[3]]);
            uf.unite(arc_ix[c.arc[1]], arc_ix[c.arc[2]]);
        }
    }
    std::map<int, int> circle_ix;
    for (const auto& [arc, ix] : arc_ix) {
        int root = uf.find(ix);
        if (!circle_ix.count(root)) {
            int k = static_cast<int>(circle_ix.size());
            circle_ix[root] = k;
        }
    }
    int ncirc = static_cast<int>(circle_ix.size());
    for (const auto& c : d.crossings()) {
        int u = circle_ix[uf.find(arc_ix[c.arc[0]])];
        int v = circle_ix[uf.find(arc_ix[c.arc[2]])];
        st.edges.push_back({u, v, c.sign});
    }
    st.circles = ncirc + d.free_loops();

    // components of the one-sign subgraphs; isolated vertices count
    for (int sign : {+1, -1}) {
        UnionFind g(ncirc ? ncirc : 1);
        int merges = 0;
        for (const auto& e : st.edges)
            if (e[2] == sign && g.unite(e[0], e[1])) ++merges;
        int comps = (ncirc ? ncirc : 0) - merges + d.free_loops();
        (sign > 0 ? st.o_plus : st.o_minus) = comps;
    }
    return st;
}

RatInterval bennequin_bounds(const SeifertStats& s) {
    long lo = s.writhe - s.circles + 2L * s.o_plus - 1;
    long hi = s.writhe + s.circles - 2L * s.o_minus + 1;
    return RatInterval(rat(lo), rat(hi));
}

bool is_homogeneous(const SeifertStats& s) {
    return s.o_plus + s.o_minus == s.circles + 1;
}

long positive_braid_value(const std::vector<int>& word, int strands) {
    for (int letter : word)
        if (letter <= 0) throw std::invalid_argument("braid word is not positive");
    Diagram d = Diagram::from_braid(word, strands);
    if (!d.is_knot())
        throw std::invalid_argument("closure is a link, not a knot");
    return 1 + static_cast<long>(word.size()) - strands;
}

namespace {

// Faces of the underlying 4-valent planar graph, as orbits of half-edges
// under corner traversal. Half-edge (c, s) sits at crossing c, slot s; its
// face corner lies between slots s and s+1.
struct Faces {
    std::vector<std::vector<int>> face_of;     // [crossing][slot] -> face id
    int count = 0;
};

Faces trace_faces(const Diagram& d) {
    size_t n = d.crossing_count();
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (size_t i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) occ[d.crossings()[i].arc[s]].push_back({(int)i, s});
    auto mate = [&](int ci, int si) -> std::pair<int, int> {
        const auto& v = occ[d.crossings()[ci].arc[si]];
        return (v[0] == std::make_pair(ci, si)) ? v[1] : v[0];
    };
    Faces f;
    f.face_of.assign(n, std::vector<int>(4, -1));
    for (size_t i = 0; i < n; ++i)
        for (int s0 = 0; s0 < 4; ++s0) {
            if (f.face_of[i][s0] >= 0) continue;
            int ci = static_cast<int>(i), si = s0;
            while (f.face_of[ci][si] < 0) {
                f.face_of[ci][si] = f.count;
                auto [cj, sj] = mate(ci, (si + 1) % 4);
                ci = cj;
                si = sj;
            }
            ++f.count;
        }
    return f;
}

}  // namespace

std::pair<int, Int> sym_signature_det(std::vector<std::vector<Rat>> m) {
    // Lagrange congruence reduction; only the trailing block is ever read or
    // written, so the matrix stays symmetric throughout.
    int n = static_cast<int>(m.size());
    int sig = 0;
    Rat det = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int j = k + 1; j < n; ++j)
                if (m[j][j] != 0) {
                    piv = j;
                    break;
                }
            if (piv >= 0) {
                std::swap(m[k], m[piv]);
                for (int i = 0; i < n; ++i) std::swap(m[i][k], m[i][piv]);
            } else {
                int j = -1;
                for (int jj = k + 1; jj < n; ++jj)
                    if (m[k][jj] != 0) {
                        j = jj;
                        break;
                    }
                if (j < 0) {  // the whole row/column vanishes
                    det = 0;
                    continue;
                }
                // symmetric row+column add makes the diagonal nonzero
                for (int i = k; i < n; ++i) m[k][i] += m[j][i];
                for (int i = k; i < n; ++i) m[i][k] += m[i][j];
            }
        }
        Rat p = m[k][k];
        sig += p > 0 ? 1 : -1;
        det *= p;
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat factor = m[i][k] / p;
            for (int j = k + 1; j < n; ++j) m[i][j] -= factor * m[k][j];
            m[i][k] = 0;
        }
        for (int j = k + 1; j < n; ++j) m[k][j] = 0;
    }
    if (det.get_den() != 1) throw std::logic_error("non-integer determinant");
    return {sig, Int(det.get_num())};
}

GoeritzData goeritz(const Diagram& d) {
    size_t n = d.crossing_count();
    if (n == 0) return {{}, 0};
    Faces f = trace_faces(d);
    long euler = static_cast<long>(n) - 2L * n + f.count;
    if (euler != 2)
        throw std::invalid_argument("face recovery failure: diagram not planar/connected");

    // checkerboard coloring of faces
    std::vector<int> color(f.count, -1);
    std::vector<int> stack = {0};
    color[0] = 0;
    // faces adjacent across an arc: the two half-edges of the arc lie in them
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (size_t i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) occ[d.crossings()[i].arc[s]].push_back({(int)i, s});
    std::vector<std::vector<int>> nbr(f.count);
    for (const auto& [arc, v] : occ) {
        int f1 = f.face_of[v[0].first][v[0].second];
        int f2 = f.face_of[v[1].first][v[1].second];
        nbr[f1].push_back(f2);
        nbr[f2].push_back(f1);
    }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : nbr[x]) {
            if (color[y] < 0) {
                color[y] = 1 - color[x];
                stack.push_back(y);
            } else if (color[y] == color[x]) {
                throw std::invalid_argument("face recovery failure: no checkerboard coloring");
            }
        }
    }

    const int white = 0;
    std::vector<int> white_ix(f.count, -1);
    int nwhite = 0;
    for (int i = 0; i < f.count; ++i)
        if (color[i] == white) white_ix[i] = nwhite++;

    std::vector<std::vector<long>> full(nwhite, std::vector<long>(nwhite, 0));
    long mu = 0;
    for (size_t i = 0; i < n; ++i) {
        const auto& c = d.crossings()[i];
        // corners between slots (0,1) and (2,3) against (1,2) and (3,0)
        bool white01 = color[f.face_of[i][0]] == white;
        int eta = white01 ? +1 : -1;
        bool type2 = (white01 == (c.sign > 0));
        if (type2) mu += eta;
        int fa = white01 ? f.face_of[i][0] : f.face_of[i][1];
        int fb = white01 ? f.face_of[i][2] : f.face_of[i][3];
        int u = white_ix[fa], v = white_ix[fb];
        if (u != v) {
            full[u][v] -= eta;
            full[v][u] -= eta;
        }
    }
    for (int i = 0; i < nwhite; ++i) {
        long s = 0;
        for (int j = 0; j < nwhite; ++j)
            if (j != i) s += full[i][j];
        full[i][i] = -s;
    }
    GoeritzData g;
    g.correction = mu;
    g.matrix.assign(nwhite - 1, std::vector<long>(nwhite - 1, 0));
    for (int i = 1; i < nwhite; ++i)
        for (int j = 1; j < nwhite; ++j) g.matrix[i - 1][j - 1] = full[i][j];
    return g;
}

int signature(const Diagram& d) {
    if (d.crossing_count() == 0) return 0;
    GoeritzData g = goeritz(d);
    int n = static_cast<int>(g.matrix.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = rat(g.matrix[i][j]);
    auto [sig, det] = sym_signature_det(m);
    // convention fixed by signature(T(3,2)) = +2
    return static_cast<int>(g.correction - sig);
}

Int knot_determinant(const Diagram& d) {
    if (d.crossing_count() == 0) return 1;
    GoeritzData g = goeritz(d);
    int n = static_cast<int>(g.matrix.size());
    if (n == 0) return 1;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = rat(g.matrix[i][j]);
    auto [sig, det] = sym_signature_det(m);
    return abs(det);
}

}  // namespace knotlib
