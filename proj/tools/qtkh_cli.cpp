// Command-line surface for the quasi-tree machinery: parse a PD code or a
// permutation file, then inspect the ribbon graph, enumerate quasi-trees
// with their bigradings, compare the Euler characteristic against the
// Kauffman-bracket Jones polynomial, draw chord diagrams, run the
// consistency battery, or sweep a whole corpus file.

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtkh/linkdiag.hpp"
#include "qtkh/poly.hpp"
#include "qtkh/quasitree.hpp"
#include "qtkh/ribbon.hpp"
#include "qtkh/treemodel.hpp"
#include "qtkh/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qtkh;

namespace {

struct Config {
    std::string input = "-";
    std::string input_kind = "pd";
    std::string format = "text";
    int jobs = 1;
    int max_crossings = 16;
    int eps = 0;    // 0 = calibrate on the anchors
    int sigma = 0;
    std::uint64_t seed = 20260824;
    int trials = 100;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string default_corpus_path() {
    if (const char* env = std::getenv("QTKH_CORPUS")) return env;
    return "data/corpus.tsv";
}

std::vector<std::pair<std::string, std::string>> load_corpus(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error("corpus line without a tab: " + line);
        out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    if (out.empty()) throw std::runtime_error("corpus file is empty: " + path);
    return out;
}

std::string edge_list(EdgeMask m) {
    std::string s;
    for (int e = 0; e < 32; ++e)
        if (mask_has(m, e)) {
            if (!s.empty()) s += ",";
            s += std::to_string(e + 1);
        }
    return s.empty() ? "-" : s;
}

std::string walk_string(const ChordDiagram& cd) {
    std::string s;
    for (int m : cd.walk) {
        if (!s.empty()) s += " ";
        s += std::to_string(m + 1);
    }
    return s;
}

Calibration pick_calibration(const Config& cfg) {
    if (cfg.eps != 0 && cfg.sigma != 0) return {cfg.eps, cfg.sigma};
    return calibrate_on_anchors();
}

LinkDiagram parse_pd_checked(const std::string& text, const Config& cfg) {
    LinkDiagram d = parse_pd(text);
    if (d.n() > cfg.max_crossings)
        throw std::runtime_error("diagram exceeds --max-crossings (" +
                                 std::to_string(cfg.max_crossings) + ")");
    return d;
}

void require_knot(const LinkDiagram& d) {
    if (d.component_count != 1)
        throw std::runtime_error(
            "this command needs a knot; the input has " +
            std::to_string(d.component_count) + " components");
}

void emit(const json& j, const Config& cfg) {
    if (cfg.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    throw std::logic_error("emit: unhandled format");
}

std::string sigma1_string(const RibbonGraph& rg) {
    std::vector<int> img(2 * rg.n);
    for (int i = 0; i < 2 * rg.n; ++i) img[i] = (i ^ 1) + 1;
    return cycles_string(img);
}

std::string signs_string(const std::vector<int>& signs) {
    std::string s;
    for (int x : signs) s += x > 0 ? '+' : '-';
    return s.empty() ? "-" : s;
}

// ---------------------------------------------------------------- info

int cmd_info(const Config& cfg) {
    std::string text = read_input(cfg.input);
    json j;
    j["command"] = "info";
    std::vector<std::pair<std::string, std::string>> rows;
    auto put = [&](const std::string& k, const json& v) {
        j[k] = v;
        rows.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
    };
    if (cfg.input_kind == "pd") {
        LinkDiagram d = parse_pd_checked(text, cfg);
        RibbonGraph rg = ribbon_from_diagram(d);
        TaitGraph tait = tait_graph(d);
        put("crossings", d.n());
        put("writhe", writhe(d));
        put("positive_crossings", positive_crossings(d));
        put("components", d.component_count);
        put("faces", d.face_count);
        put("tait_vertices", tait.vertex_count);
        put("tait_positive_edges", tait.positive_count());
        put("tait_negative_edges", tait.negative_count());
        put("rg_vertices", rg.vertex_count);
        put("rg_edges", rg.edge_count());
        put("rg_faces", rg.face_count);
        put("rg_genus", rg.genus());
        put("quasitrees",
            (json::number_integer_t)enumerate_quasitrees(rg, cfg.max_crossings)
                .size());
    } else {
        RibbonGraph rg = parse_sigma_file(text);
        put("rg_vertices", rg.vertex_count);
        put("rg_edges", rg.edge_count());
        put("rg_faces", rg.face_count);
        put("rg_genus", rg.genus());
        put("sigma0", sigma0_string(rg));
        put("sigma1", sigma1_string(rg));
        put("sigma2", sigma2_string(rg));
        put("signs", signs_string(rg.edge_sign));
        put("quasitrees",
            (json::number_integer_t)enumerate_quasitrees(rg, cfg.max_crossings)
                .size());
    }
    if (cfg.format == "json") {
        emit(j, cfg);
    } else if (cfg.format == "tsv") {
        for (auto& [k, v] : rows) std::cout << k << "\t" << v << "\n";
    } else {
        for (auto& [k, v] : rows) std::cout << k << " = " << v << "\n";
    }
    return 0;
}

// ------------------------------------------------- quasi-tree row data

struct QtRow {
    int index;
    EdgeMask mask;
    int size;
    int genus;
    Bigrading uv;
    std::string word, word_pretty, tree_word, tree_word_pretty, walk;
    EdgeMask tree;
    bool has_ij = false;
    IndexPair ij;
};

std::vector<QtRow> quasitree_rows_pd(const LinkDiagram& d, const Config& cfg) {
    BigradedTable tab = build_table(d, -1, cfg.max_crossings);
    RibbonGraph rg = ribbon_from_diagram(d);
    std::vector<QtRow> rows;
    int idx = 1;
    for (const GeneratorRow& r : tab.rows) {
        QtRow q;
        q.index = idx++;
        q.mask = r.quasitree;
        q.size = std::popcount(r.quasitree);
        q.genus = r.genus;
        q.uv = r.grading;
        q.word = r.qt_word;
        q.word_pretty = r.qt_word_pretty;
        q.tree_word = r.tree_word;
        q.tree_word_pretty = r.tree_word_pretty;
        q.tree = r.tree;
        q.walk = walk_string(chord_diagram(rg, r.quasitree));
        q.has_ij = true;
        q.ij = r.ij;
        rows.push_back(q);
    }
    return rows;
}

std::vector<QtRow> quasitree_rows_sigma(const RibbonGraph& rg,
                                        const Config& cfg) {
    std::vector<QtRow> rows;
    int idx = 1;
    for (const QuasiTree& qt : enumerate_quasitrees(rg, cfg.max_crossings)) {
        QtRow q;
        q.index = idx++;
        q.mask = qt.edges;
        q.size = std::popcount(qt.edges);
        q.genus = qt.genus;
        q.uv = qt.grading;
        q.word = activity_word_ascii(rg.n, qt.edges, qt.live);
        q.word_pretty = activity_word_pretty(rg.n, qt.edges, qt.live);
        q.tree = tree_from_quasitree(rg, qt.edges);
        // the partner's letters transport along the bijection: same
        // live/dead shapes, case from membership, bars from signs
        q.tree_word = activity_word_ascii(rg.n, q.tree, qt.live, rg.edge_sign);
        q.tree_word_pretty =
            activity_word_pretty(rg.n, q.tree, qt.live, rg.edge_sign);
        q.walk = walk_string(chord_diagram(rg, qt.edges));
        rows.push_back(q);
    }
    return rows;
}

std::vector<QtRow> quasitree_rows(const Config& cfg, const std::string& text) {
    if (cfg.input_kind == "pd")
        return quasitree_rows_pd(parse_pd_checked(text, cfg), cfg);
    return quasitree_rows_sigma(parse_sigma_file(text), cfg);
}

json qt_row_json(const QtRow& q) {
    json r;
    r["index"] = q.index;
    r["edges"] = edge_list(q.mask);
    r["size"] = q.size;
    r["genus"] = q.genus;
    r["u"] = q.uv.u;
    r["v"] = q.uv.v;
    r["word"] = q.word;
    r["word_pretty"] = q.word_pretty;
    r["tree_edges"] = edge_list(q.tree);
    r["tree_word"] = q.tree_word;
    r["tree_word_pretty"] = q.tree_word_pretty;
    r["walk"] = q.walk;
    if (q.has_ij) {
        r["i"] = q.ij.i;
        r["j"] = q.ij.j;
    }
    return r;
}

int cmd_quasitrees(const Config& cfg) {
    std::vector<QtRow> rows = quasitree_rows(cfg, read_input(cfg.input));
    if (cfg.format == "json") {
        json j;
        j["command"] = "quasitrees";
        j["count"] = (json::number_integer_t)rows.size();
        j["rows"] = json::array();
        for (const QtRow& q : rows) j["rows"].push_back(qt_row_json(q));
        emit(j, cfg);
    } else if (cfg.format == "tsv") {
        std::cout << "#index\tedges\tsize\tgenus\tu\tv\tword\ttree_edges\t"
                     "tree_word\twalk\n";
        for (const QtRow& q : rows)
            std::cout << q.index << "\t" << edge_list(q.mask) << "\t" << q.size
                      << "\t" << q.genus << "\t" << q.uv.u << "\t" << q.uv.v
                      << "\t" << q.word << "\t" << edge_list(q.tree) << "\t"
                      << q.tree_word << "\t" << q.walk << "\n";
    } else {
        std::cout << rows.size() << " quasi-trees\n";
        for (const QtRow& q : rows) {
            std::cout << "  Q" << q.index << ": edges {" << edge_list(q.mask)
                      << "} genus " << q.genus << "  (u,v)=(" << q.uv.u << ","
                      << q.uv.v << ")  word " << q.word_pretty << "  tree {"
                      << edge_list(q.tree) << "} " << q.tree_word_pretty;
            if (q.has_ij)
                std::cout << "  (i,j)=(" << q.ij.i << "," << q.ij.j << ")";
            std::cout << "\n    walk " << q.walk << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------ gradings

int cmd_gradings(const Config& cfg) {
    std::string text = read_input(cfg.input);
    std::map<Bigrading, long long> counts;
    std::vector<QtRow> rows;
    json extra;
    if (cfg.input_kind == "pd") {
        LinkDiagram d = parse_pd_checked(text, cfg);
        require_knot(d);
        BigradedTable tab = build_table(d, -1, cfg.max_crossings);
        rows = quasitree_rows_pd(d, cfg);
        counts = tab.counts;
        extra["thickness"] = tab.thickness();
        extra["rg_genus"] = tab.rg_genus;
        extra["chi_q"] = tab.chi_q.str("q");
    } else {
        RibbonGraph rg = parse_sigma_file(text);
        rows = quasitree_rows_sigma(rg, cfg);
        for (const QtRow& q : rows) counts[q.uv] += 1;
        std::set<int> vs;
        for (auto& [g, c] : counts) vs.insert(g.v);
        extra["thickness"] = (json::number_integer_t)vs.size();
        extra["rg_genus"] = rg.genus();
    }
    if (cfg.format == "json") {
        json j;
        j["command"] = "gradings";
        j["counts"] = json::array();
        for (auto& [g, c] : counts)
            j["counts"].push_back({{"u", g.u}, {"v", g.v}, {"count", c}});
        for (auto& [k, v] : extra.items()) j[k] = v;
        j["rows"] = json::array();
        for (const QtRow& q : rows) j["rows"].push_back(qt_row_json(q));
        emit(j, cfg);
    } else if (cfg.format == "tsv") {
        std::cout << "#u\tv\tcount\n";
        for (auto& [g, c] : counts)
            std::cout << g.u << "\t" << g.v << "\t" << c << "\n";
    } else {
        std::cout << "generator counts by (u,v):\n";
        for (auto& [g, c] : counts)
            std::cout << "  u=" << std::setw(3) << g.u << "  v=" << std::setw(3)
                      << g.v << "  count=" << c << "\n";
        std::cout << "thickness = " << extra["thickness"].dump()
                  << "  (ambient genus " << extra["rg_genus"].dump() << ")\n";
        if (extra.contains("chi_q"))
            std::cout << "chi_q = " << extra["chi_q"].get<std::string>()
                      << "\n";
        std::cout << "generators:\n";
        for (const QtRow& q : rows)
            std::cout << "  Q" << q.index << " {" << edge_list(q.mask)
                      << "}  (u,v)=(" << q.uv.u << "," << q.uv.v << ")  "
                      << q.word_pretty << " <-> " << q.tree_word_pretty
                      << " {" << edge_list(q.tree) << "}\n";
    }
    return 0;
}

// --------------------------------------------------------------- jones

int cmd_jones(const Config& cfg) {
    std::string text = read_input(cfg.input);
    if (cfg.input_kind != "pd")
        throw std::runtime_error(
            "jones needs a diagram input (--input-kind pd)");
    LinkDiagram d = parse_pd_checked(text, cfg);
    require_knot(d);
    Calibration cal = pick_calibration(cfg);
    JonesComparison cmp = compare_jones(d, cal, -1, cfg.max_crossings);
    if (cfg.format == "json") {
        json j;
        j["command"] = "jones";
        j["eps"] = cal.eps;
        j["sigma"] = cal.sigma;
        j["chi_q"] = cmp.chi_q.str("q");
        j["chi_t"] = cmp.chi_t.str("t");
        j["jones_t"] = cmp.jones_t.str("t");
        j["equal"] = cmp.equal;
        emit(j, cfg);
    } else if (cfg.format == "tsv") {
        std::cout << "chi_q\t" << cmp.chi_q.str("q") << "\n"
                  << "chi_t\t" << cmp.chi_t.str("t") << "\n"
                  << "jones_t\t" << cmp.jones_t.str("t") << "\n"
                  << "equal\t" << (cmp.equal ? "yes" : "no") << "\n";
    } else {
        std::cout << "calibration: eps=" << (cal.eps > 0 ? "+1" : "-1")
                  << " sigma=" << (cal.sigma > 0 ? "+1" : "-1") << "\n";
        std::cout << "euler characteristic (q): " << cmp.chi_q.str("q") << "\n";
        std::cout << "euler characteristic (t): " << cmp.chi_t.str("t") << "\n";
        std::cout << "bracket Jones        (t): " << cmp.jones_t.str("t")
                  << "\n";
        std::cout << "verdict: " << (cmp.equal ? "PASS" : "FAIL") << "\n";
    }
    return cmp.equal ? 0 : 1;
}

// -------------------------------------------------------------- chords

std::string chords_svg(const std::vector<QtRow>& rows, const RibbonGraph& rg) {
    const int cell = 220, radius = 80, per_row = 4;
    int nrows = (static_cast<int>(rows.size()) + per_row - 1) / per_row;
    int width = per_row * cell, height = std::max(1, nrows) * cell;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
       << height << "\">\n";
    int k = 0;
    for (const QtRow& q : rows) {
        ChordDiagram cd = chord_diagram(rg, q.mask);
        double cx = cell * (k % per_row) + cell / 2.0;
        double cy = cell * (k / per_row) + cell / 2.0;
        ++k;
        os << "  <g>\n";
        os << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\""
           << radius << "\" fill=\"none\" stroke=\"#888\"/>\n";
        int marks = 2 * cd.n;
        auto pos = [&](int p) {
            double ang = -M_PI / 2 + 2 * M_PI * p / marks;
            return std::pair<double, double>(cx + radius * std::cos(ang),
                                             cy + radius * std::sin(ang));
        };
        std::vector<char> lv = cd.live_chords();
        for (int e = 0; e < cd.n; ++e) {
            auto [x1, y1] = pos(cd.span[e][0]);
            auto [x2, y2] = pos(cd.span[e][1]);
            bool inside = mask_has(q.mask, e);
            bool live = lv[e];
            os << "    <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\""
               << x2 << "\" y2=\"" << y2 << "\" stroke=\""
               << (live ? "#c0392b" : "#2c3e50") << "\" stroke-width=\""
               << (inside ? 2.5 : 1.2) << "\""
               << (inside ? "" : " stroke-dasharray=\"5,4\"") << "/>\n";
            double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
            os << "    <text x=\"" << mx << "\" y=\"" << my
               << "\" font-size=\"10\" fill=\"#555\">" << e + 1 << "</text>\n";
        }
        for (int p = 0; p < marks; ++p) {
            auto [x, y] = pos(p);
            os << "    <circle cx=\"" << x << "\" cy=\"" << y
               << "\" r=\"2.5\" fill=\"#000\"/>\n";
            double ang = -M_PI / 2 + 2 * M_PI * p / marks;
            double tx = cx + (radius + 12) * std::cos(ang);
            double ty = cy + (radius + 12) * std::sin(ang) + 3;
            os << "    <text x=\"" << tx << "\" y=\"" << ty
               << "\" font-size=\"10\" text-anchor=\"middle\">"
               << cd.walk[p] + 1 << "</text>\n";
        }
        os << "    <text x=\"" << cx << "\" y=\"" << cy - radius - 20
           << "\" font-size=\"12\" text-anchor=\"middle\">Q" << q.index
           << " {" << edge_list(q.mask) << "} (u,v)=(" << q.uv.u << ","
           << q.uv.v << ")</text>\n";
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

int cmd_chords(const Config& cfg) {
    std::string text = read_input(cfg.input);
    RibbonGraph rg = cfg.input_kind == "pd"
                         ? ribbon_from_diagram(parse_pd_checked(text, cfg))
                         : parse_sigma_file(text);
    std::vector<QtRow> rows = cfg.input_kind == "pd"
                                  ? quasitree_rows_pd(parse_pd(text), cfg)
                                  : quasitree_rows_sigma(rg, cfg);
    if (cfg.format == "svg") {
        std::cout << chords_svg(rows, rg);
    } else if (cfg.format == "json") {
        json j;
        j["command"] = "chords";
        j["rows"] = json::array();
        for (const QtRow& q : rows) {
            ChordDiagram cd = chord_diagram(rg, q.mask);
            json r;
            r["index"] = q.index;
            r["edges"] = edge_list(q.mask);
            r["walk"] = q.walk;
            r["spans"] = json::array();
            for (int e = 0; e < cd.n; ++e)
                r["spans"].push_back({cd.span[e][0], cd.span[e][1]});
            std::vector<char> lv = cd.live_chords();
            std::string live;
            for (int e = 0; e < cd.n; ++e) live += lv[e] ? 'L' : 'd';
            r["live"] = live;
            j["rows"].push_back(r);
        }
        emit(j, cfg);
    } else if (cfg.format == "tsv") {
        std::cout << "#index\tedges\twalk\tlive\n";
        for (const QtRow& q : rows) {
            ChordDiagram cd = chord_diagram(rg, q.mask);
            std::vector<char> lv = cd.live_chords();
            std::string live;
            for (int e = 0; e < cd.n; ++e) live += lv[e] ? 'L' : 'd';
            std::cout << q.index << "\t" << edge_list(q.mask) << "\t" << q.walk
                      << "\t" << live << "\n";
        }
    } else {
        for (const QtRow& q : rows)
            std::cout << "Q" << q.index << " {" << edge_list(q.mask)
                      << "}: walk " << q.walk << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- verify

int cmd_verify(const Config& cfg) {
    std::string text = read_input(cfg.input);
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.trials = cfg.trials;
    opt.max_edges = cfg.max_crossings;
    VerifyReport rep = cfg.input_kind == "pd"
                           ? verify_diagram(parse_pd_checked(text, cfg), opt)
                           : verify_ribbon(parse_sigma_file(text), opt);
    if (cfg.format == "json") {
        json j;
        j["command"] = "verify";
        j["all_pass"] = rep.all_pass();
        j["checks"] = json::array();
        for (const CheckResult& c : rep.checks) {
            json r;
            r["name"] = c.name;
            r["pass"] = c.pass;
            if (!c.pass) r["detail"] = c.detail;
            j["checks"].push_back(r);
        }
        emit(j, cfg);
    } else {
        for (const CheckResult& c : rep.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.pass) std::cout << "  -- " << c.detail;
            std::cout << "\n";
        }
        std::cout << (rep.all_pass() ? "all checks passed"
                                     : std::to_string(rep.failed_count()) +
                                           " check(s) failed")
                  << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

// -------------------------------------------------------------- corpus

struct CorpusRow {
    std::string name;
    std::string error;  // nonempty = failed to process
    int n = 0, components = 0, w = 0;
    int rg_vertices = 0, rg_genus = 0;
    long long quasitrees = 0, det = 0;
    bool counts_ok = false;
    std::string jones;  // PASS / FAIL / "-" for links
};

CorpusRow corpus_row(const std::string& name, const std::string& pd,
                     const Config& cfg, const Calibration& cal) {
    CorpusRow row;
    row.name = name;
    try {
        LinkDiagram d = parse_pd(pd);
        if (d.n() > cfg.max_crossings) {
            row.error = "exceeds --max-crossings";
            return row;
        }
        RibbonGraph rg = ribbon_from_diagram(d);
        row.n = d.n();
        row.components = d.component_count;
        row.w = writhe(d);
        row.rg_vertices = rg.vertex_count;
        row.rg_genus = rg.genus();
        row.quasitrees =
            (long long)enumerate_quasitrees(rg, cfg.max_crossings).size();
        TaitGraph tait = tait_graph(d);
        row.det = spanning_tree_count(tait);
        long long trees = (long long)spanning_tree_masks(tait).size();
        row.counts_ok = row.quasitrees == trees && trees == row.det;
        if (d.component_count == 1) {
            JonesComparison cmp = compare_jones(d, cal, -1, cfg.max_crossings);
            row.jones = cmp.equal ? "PASS" : "FAIL";
        } else {
            row.jones = "-";
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int cmd_corpus(const Config& cfg) {
    std::string path = cfg.input == "-" ? default_corpus_path() : cfg.input;
    auto entries = load_corpus(path);
    Calibration cal = pick_calibration(cfg);

    std::vector<CorpusRow> rows(entries.size());
    int jobs = std::max(1, cfg.jobs);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= entries.size()) break;
            rows[i] = corpus_row(entries[i].first, entries[i].second, cfg, cal);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    bool all_ok = true;
    for (const CorpusRow& r : rows)
        if (!r.error.empty() || !r.counts_ok || r.jones == "FAIL")
            all_ok = false;

    if (cfg.format == "json") {
        json j;
        j["command"] = "corpus";
        j["corpus"] = path;
        j["entries"] = (json::number_integer_t)rows.size();
        j["all_ok"] = all_ok;
        j["rows"] = json::array();
        for (const CorpusRow& r : rows) {
            json x;
            x["name"] = r.name;
            if (!r.error.empty()) {
                x["error"] = r.error;
            } else {
                x["crossings"] = r.n;
                x["components"] = r.components;
                x["writhe"] = r.w;
                x["rg_vertices"] = r.rg_vertices;
                x["rg_genus"] = r.rg_genus;
                x["quasitrees"] = r.quasitrees;
                x["matrix_tree"] = r.det;
                x["counts_ok"] = r.counts_ok;
                x["jones"] = r.jones;
            }
            j["rows"].push_back(x);
        }
        emit(j, cfg);
    } else if (cfg.format == "tsv") {
        std::cout << "#name\tcrossings\tcomponents\twrithe\trg_vertices\t"
                     "rg_genus\tquasitrees\tmatrix_tree\tcounts_ok\tjones\n";
        for (const CorpusRow& r : rows) {
            if (!r.error.empty()) {
                std::cout << r.name << "\tERROR\t" << r.error << "\n";
                continue;
            }
            std::cout << r.name << "\t" << r.n << "\t" << r.components << "\t"
                      << r.w << "\t" << r.rg_vertices << "\t" << r.rg_genus
                      << "\t" << r.quasitrees << "\t" << r.det << "\t"
                      << (r.counts_ok ? "yes" : "no") << "\t" << r.jones
                      << "\n";
        }
    } else {
        for (const CorpusRow& r : rows) {
            if (!r.error.empty()) {
                std::cout << r.name << ": ERROR " << r.error << "\n";
                continue;
            }
            std::cout << r.name << ": n=" << r.n << " comps=" << r.components
                      << " w=" << r.w << " V(RG)=" << r.rg_vertices
                      << " g=" << r.rg_genus << " qt=" << r.quasitrees
                      << " det=" << r.det
                      << (r.counts_ok ? " counts=ok" : " counts=MISMATCH")
                      << " jones=" << r.jones << "\n";
        }
        std::cout << (all_ok ? "corpus ok" : "corpus has failures") << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "quasi-tree model toolkit: ribbon graphs, bigradings, and the "
        "Kauffman-bracket cross-check for link diagrams"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--input,-i", cfg.input,
                   "input file, '-' for stdin (default)");
    app.add_option("--input-kind,-k", cfg.input_kind, "pd or sigma")
        ->check(CLI::IsMember({"pd", "sigma"}));
    app.add_option("--format,-f", cfg.format, "text, json, tsv, or svg")
        ->check(CLI::IsMember({"text", "json", "tsv", "svg"}));
    app.add_option("--jobs,-j", cfg.jobs, "worker threads for corpus runs")
        ->check(CLI::Range(1, 64));
    app.add_option("--max-crossings", cfg.max_crossings,
                   "enumeration guard (hard cap 20)")
        ->check(CLI::Range(1, 20));
    app.add_option("--eps", cfg.eps, "calibration sign (+1/-1); 0 = derive")
        ->check(CLI::IsMember({-1, 0, 1}));
    app.add_option("--sigma", cfg.sigma,
                   "calibration exponent sign (+1/-1); 0 = derive")
        ->check(CLI::IsMember({-1, 0, 1}));
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--trials", cfg.trials, "randomized trials in verify")
        ->check(CLI::Range(0, 100000));

    auto* info = app.add_subcommand("info", "diagram / ribbon graph summary");
    auto* quasitrees =
        app.add_subcommand("quasitrees", "enumerate quasi-trees with words");
    auto* gradings =
        app.add_subcommand("gradings", "bigraded generator table (knots)");
    auto* jones = app.add_subcommand(
        "jones", "Euler characteristic vs. the bracket polynomial");
    auto* chords = app.add_subcommand("chords", "chord diagrams per quasi-tree");
    auto* verify = app.add_subcommand("verify", "run the consistency battery");
    auto* corpus = app.add_subcommand("corpus", "sweep a corpus TSV file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_info(cfg);
        if (quasitrees->parsed()) return cmd_quasitrees(cfg);
        if (gradings->parsed()) return cmd_gradings(cfg);
        if (jones->parsed()) return cmd_jones(cfg);
        if (chords->parsed()) return cmd_chords(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (corpus->parsed()) return cmd_corpus(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
