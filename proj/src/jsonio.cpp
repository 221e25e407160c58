#include "tkh/jsonio.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tkh {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
    throw TkhError("PARSE_ERROR", what);
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

long long to_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long long>();
}

std::string to_str(const json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Rat rat_at(const json& j, size_t i) {
    const long long num = to_int(j.at(i), "numerator");
    const long long den = to_int(j.at(i + 1), "denominator");
    if (den <= 0) bad("rational with nonpositive denominator");
    if (std::gcd(num < 0 ? -num : num, den) != 1)
        bad("rational not in lowest terms");
    return to_rat(num) / to_rat(den);
}

QPoint point(const json& j) {
    if (!j.is_array() || j.size() != 4)
        bad("point must be [num, den, num, den]");
    return {rat_at(j, 0), rat_at(j, 2)};
}

IVec ivec(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        bad(std::string(what) + " must be [a, b]");
    return {to_int(j.at(0), what), to_int(j.at(1), what)};
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        bad(e.what());
    }
    if (!j.is_object()) bad("diagram file must be a JSON object");

    Diagram d;
    const long long g = to_int(field(j, "genus"), "genus");
    if (g != 0 && g != 1) bad("genus must be 0 or 1");
    d.genus = static_cast<int>(g);

    for (const json& cj : field(j, "crossings")) {
        Crossing c;
        c.id = to_str(field(cj, "id"), "crossing id");
        c.pos = point(field(cj, "position"));
        d.crossings.push_back(std::move(c));
    }
    for (const json& ej : field(j, "edges")) {
        Edge e;
        e.id = to_str(field(ej, "id"), "edge id");
        if (ej.contains("ends") && !ej["ends"].is_null()) {
            const json& ends = ej["ends"];
            if (!ends.is_array() || ends.size() != 2)
                bad("edge ends must be two [crossing, port] pairs");
            EdgeEnd ee[2];
            for (int k = 0; k < 2; ++k) {
                if (!ends.at(k).is_array() || ends.at(k).size() != 2)
                    bad("edge end must be [crossing, port]");
                ee[k].crossing = to_str(ends.at(k).at(0), "crossing ref");
                ee[k].port = static_cast<int>(to_int(ends.at(k).at(1), "port"));
            }
            e.from = ee[0];
            e.to = ee[1];
        }
        for (const json& pj : field(ej, "path")) e.path.push_back(point(pj));
        e.winding = ivec(field(ej, "winding"), "winding");
        d.edges.push_back(std::move(e));
    }
    std::map<std::string, int> eidx;
    for (size_t i = 0; i < d.edges.size(); ++i)
        eidx[d.edges[i].id] = static_cast<int>(i);
    for (const json& comp : field(j, "components")) {
        std::vector<std::pair<int, bool>> seq;
        for (const json& step : comp) {
            if (!step.is_array() || step.size() != 2)
                bad("component step must be [edge, forward]");
            const std::string id = to_str(step.at(0), "edge ref");
            auto it = eidx.find(id);
            if (it == eidx.end()) bad("component references unknown edge " + id);
            if (!step.at(1).is_boolean()) bad("forward flag must be a bool");
            seq.emplace_back(it->second, step.at(1).get<bool>());
        }
        d.components.push_back(std::move(seq));
    }
    d.finalize();
    return d;
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TkhError("IO_ERROR", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int parse_label(const json& j, const std::string& what) {
    const std::string s = to_str(j, what.c_str());
    if (s == "+") return 1;
    if (s == "-") return -1;
    bad(what + " must be \"+\" or \"-\"");
}

// Canonical order of fully surgered circles: ascending least gap id.
std::vector<int> canonical_order(const Configuration& fin) {
    std::vector<std::pair<int, int>> by_gap;
    for (size_t i = 0; i < fin.circles.size(); ++i) {
        int least = -1;
        for (const auto& g : fin.circles[i].gaps)
            for (int id : g)
                if (least < 0 || id < least) least = id;
        by_gap.emplace_back(least, static_cast<int>(i));
    }
    std::sort(by_gap.begin(), by_gap.end());
    std::vector<int> order;
    for (const auto& [g, i] : by_gap) order.push_back(i);
    return order;
}

}  // namespace

Decorated parse_decorated(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        bad(e.what());
    }
    if (!j.is_object()) bad("configuration file must be a JSON object");

    Configuration c;
    if (j.contains("genus")) {
        const long long g = to_int(j["genus"], "genus");
        if (g != 0 && g != 1) bad("genus must be 0 or 1");
        c.genus = static_cast<int>(g);
    }

    // Collect circles, slot tokens, and the arc universe.
    const json& cj = field(j, "circles");
    if (!cj.is_object()) bad("circles must be an object");
    struct SlotTok {
        std::string arc;
        int end;
    };
    std::vector<std::vector<SlotTok>> slot_toks;
    std::map<std::string, std::array<int, 2>> arc_ends_seen;
    for (auto it = cj.begin(); it != cj.end(); ++it) {
        CCircle z;
        z.name = it.key();
        const json& body = it.value();
        const json& slots = body.is_array() ? body : field(body, "slots");
        if (!slots.is_array()) bad("slots must be an array");
        std::vector<SlotTok> toks;
        for (const json& sj : slots) {
            const std::string tok = to_str(sj, "slot");
            const size_t dot = tok.rfind('.');
            if (dot == std::string::npos || dot + 2 != tok.size() ||
                (tok[dot + 1] != '0' && tok[dot + 1] != '1'))
                bad("slot '" + tok + "' must look like arc.0 or arc.1");
            toks.push_back({tok.substr(0, dot), tok[dot + 1] - '0'});
            auto& seen = arc_ends_seen.try_emplace(toks.back().arc,
                                                   std::array<int, 2>{0, 0})
                             .first->second;
            ++seen[toks.back().end];
        }
        IVec cls;
        const bool has_cls = body.is_object() && body.contains("class");
        if (has_cls) cls = ivec(body["class"], "circle class");
        const size_t k = toks.size();
        if (body.is_object() && body.contains("gains")) {
            const json& gj = body["gains"];
            if (!gj.is_array() || gj.size() != std::max<size_t>(k, 1))
                bad("gains must have one entry per segment");
            for (const json& g : gj) z.gains.push_back(ivec(g, "gain"));
            IVec sum;
            for (const IVec& g : z.gains) sum = sum + g;
            if (has_cls && sum != cls)
                throw TkhError("MALFORMED", "circle gains do not sum to class");
            cls = sum;
        } else {
            z.gains.assign(std::max<size_t>(k, 1), IVec{});
            z.gains.back() = cls;
        }
        if (c.genus == 0 && !cls.is_zero())
            throw TkhError("MALFORMED", "essential circle on the sphere");
        if (cls.is_zero()) z.disk_left = true;
        slot_toks.push_back(std::move(toks));
        c.circles.push_back(std::move(z));
    }

    for (const auto& [name, seen] : arc_ends_seen)
        if (seen[0] != 1 || seen[1] != 1)
            bad("arc '" + name + "' must have exactly ends .0 and .1");
    std::map<std::string, int> arc_index;
    for (const auto& [name, seen] : arc_ends_seen) {
        (void)seen;
        const int i = static_cast<int>(c.arcs.size());
        arc_index[name] = i;
        CArc a;
        a.name = name;
        c.arcs.push_back(std::move(a));
    }
    for (size_t ci = 0; ci < slot_toks.size(); ++ci) {
        CCircle& z = c.circles[ci];
        for (size_t s = 0; s < slot_toks[ci].size(); ++s) {
            const SlotTok& t = slot_toks[ci][s];
            const int ai = arc_index.at(t.arc);
            z.slots.emplace_back(ai, t.end);
            c.arcs[ai].end[t.end] = {static_cast<int>(ci),
                                     static_cast<int>(s)};
        }
    }

    // Per-arc declarations: class, disk side.
    const json empty_obj = json::object();
    const json& aj = j.contains("arcs") ? j["arcs"] : empty_obj;
    if (!aj.is_object()) bad("arcs must be an object");
    for (auto it = aj.begin(); it != aj.end(); ++it) {
        auto idx = arc_index.find(it.key());
        if (idx == arc_index.end())
            bad("arc '" + it.key() + "' appears in no circle");
        CArc& a = c.arcs[idx->second];
        const json& body = it.value();
        std::optional<IVec> declared;
        if (body.contains("class")) declared = ivec(body["class"], "arc class");
        if (body.contains("side")) {
            const std::string s = to_str(body["side"], "side");
            const bool chord = a.end[0].circle == a.end[1].circle;
            if (!chord)
                throw TkhError("MALFORMED",
                               "disk side declared on a joining arc");
            if (!c.circles[a.end[0].circle].cls().is_zero())
                throw TkhError("MALFORMED",
                               "disk side declared on an essential circle");
            if (s == "inner") {
                if (declared && !declared->is_zero())
                    throw TkhError("MALFORMED",
                                   "disk-side arc with a nonzero class");
                a.side[0] = a.side[1] = ArcSide::Left;
            } else if (s == "outer") {
                a.side[0] = a.side[1] = ArcSide::Right;
            } else {
                bad("side must be \"inner\" or \"outer\"");
            }
        }
        if (body.contains("sides")) {
            const json& sj = body["sides"];
            if (!sj.is_array() || sj.size() != 2) bad("sides must list two ends");
            for (int e = 0; e < 2; ++e) {
                const std::string s = to_str(sj.at(e), "sides entry");
                if (s == "left")
                    a.side[e] = ArcSide::Left;
                else if (s == "right")
                    a.side[e] = ArcSide::Right;
                else
                    bad("sides entries must be \"left\" or \"right\"");
            }
        }
        if (declared) {
            a.cls = normalize(*declared);
            if (a.end[0].circle == a.end[1].circle) {
                // Band gain so the loop through the band has the declared
                // class: declared = gain + walk from end 1 forward to end 0.
                const CCircle& z = c.circles[a.end[0].circle];
                IVec walk;
                const int n = z.size();
                for (int t = a.end[1].pos; t != a.end[0].pos; t = (t + 1) % n)
                    walk = walk + z.gains[t];
                a.gain = *declared - walk;
            } else {
                a.gain = *declared;
            }
        }
    }

    assign_gap_ids(c);
    c.check();

    Decorated dec;
    dec.config = c;

    const json& yj = field(j, "y");
    if (!yj.is_object()) bad("y must be an object");
    dec.y.resize(c.circles.size());
    std::set<std::string> named;
    for (size_t i = 0; i < c.circles.size(); ++i) named.insert(c.circles[i].name);
    for (auto it = yj.begin(); it != yj.end(); ++it)
        if (!named.count(it.key())) bad("y labels unknown circle " + it.key());
    for (size_t i = 0; i < c.circles.size(); ++i) {
        if (!yj.contains(c.circles[i].name))
            bad("y missing circle " + c.circles[i].name);
        dec.y[i] = parse_label(yj[c.circles[i].name], "y label");
    }

    const Configuration fin = full_surgery(c);
    const std::vector<int> order = canonical_order(fin);
    const json& xj = field(j, "x");
    dec.x.resize(fin.circles.size());
    if (xj.is_array()) {
        if (xj.size() != fin.circles.size())
            bad("x must label every surgered circle");
        for (size_t r = 0; r < order.size(); ++r)
            dec.x[order[r]] = parse_label(xj.at(r), "x label");
    } else if (xj.is_object()) {
        if (xj.size() != fin.circles.size())
            bad("x must label every surgered circle");
        for (size_t r = 0; r < order.size(); ++r) {
            const std::string name = "s" + std::to_string(r);
            if (!xj.contains(name)) bad("x missing circle " + name);
            dec.x[order[r]] = parse_label(xj[name], "x label");
        }
    } else {
        bad("x must be an object or an array");
    }
    return dec;
}

Diagram load_diagram(const std::string& path) {
    return parse_diagram(slurp(path));
}

Decorated load_decorated(const std::string& path) {
    return parse_decorated(slurp(path));
}

std::string report_json(const HomologyResult& r) {
    // Group rows by (quantum grading, homotopical class key).
    std::map<std::pair<int, std::string>, json> blocks;
    for (const auto& [key, grp] : r.groups) {
        const auto& [q, hkey, h] = key;
        json& b = blocks[{q, hkey}];
        if (b.is_null()) {
            b = json::object();
            b["q"] = q;
            json hc = json::array();
            auto it = r.hclasses.find(hkey);
            if (it != r.hclasses.end())
                for (const auto& [cls, coeff] : it->second.terms())
                    hc.push_back(json::array(
                        {json::array({cls.a, cls.b}), coeff}));
            b["h_class"] = hc;
            b["homology"] = json::array();
        }
        json gj = json::object();
        gj["hdeg"] = h;
        gj["rank"] = grp.rank;
        json tor = json::array();
        for (const mpz_class& t : grp.torsion) {
            if (!t.fits_slong_p())
                throw TkhError("TOO_LARGE", "torsion exceeds output range");
            tor.push_back(static_cast<long long>(t.get_si()));
        }
        gj["torsion"] = tor;
        b["homology"].push_back(gj);
    }
    json out = json::object();
    out["gradings"] = json::array();
    for (const auto& [key, b] : blocks) out["gradings"].push_back(b);
    return out.dump() + "\n";
}

namespace {

json rat_json(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (!c.get_num().fits_slong_p() || !c.get_den().fits_slong_p())
        throw TkhError("TOO_LARGE", "rational exceeds output range");
    return json::array({static_cast<long long>(c.get_num().get_si()),
                        static_cast<long long>(c.get_den().get_si())});
}

json point_json(const QPoint& p) {
    json a = rat_json(p.x);
    json b = rat_json(p.y);
    return json::array({a[0], a[1], b[0], b[1]});
}

}  // namespace

std::string diagram_json(const Diagram& d) {
    json out = json::object();
    out["genus"] = d.genus;
    out["crossings"] = json::array();
    for (const Crossing& c : d.crossings) {
        json cj = json::object();
        cj["id"] = c.id;
        cj["position"] = point_json(c.pos);
        out["crossings"].push_back(cj);
    }
    out["edges"] = json::array();
    for (const Edge& e : d.edges) {
        json ej = json::object();
        ej["id"] = e.id;
        if (!e.closed()) {
            json ends = json::array();
            ends.push_back(json::array({e.from->crossing, e.from->port}));
            ends.push_back(json::array({e.to->crossing, e.to->port}));
            ej["ends"] = ends;
        }
        json path = json::array();
        for (const QPoint& p : e.path) path.push_back(point_json(p));
        ej["path"] = path;
        ej["winding"] = json::array({e.winding.a, e.winding.b});
        out["edges"].push_back(ej);
    }
    out["components"] = json::array();
    for (const auto& comp : d.components) {
        json cj = json::array();
        for (auto [e, fwd] : comp)
            cj.push_back(json::array({d.edges[e].id, fwd}));
        out["components"].push_back(cj);
    }
    return out.dump(2) + "\n";
}

}  // namespace tkh
