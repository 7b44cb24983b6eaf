#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trip/classical_maps.hpp"
#include "trip/periodicity.hpp"
#include "trip/render.hpp"
#include "trip/simplex_nd.hpp"

using json = nlohmann::json;
using namespace trip;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitParse = 2, kExitDomain = 3, kExitDepth = 4, kExitVerify = 5;

struct DepthExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format;  // empty: the verb's default
    std::string out;
    int precision = 12;
    long max_steps = kDefaultOnesCap;
};

struct Options {
    std::string triple = "(e,e,e)";
    std::vector<std::string> points;
    std::string word;
    std::string expect;
    std::string map = "all";
    size_t terms = 10;
    size_t depth = 1;
    size_t samples = 500;
    unsigned long long seed = 1;
    size_t dim = 3;
    std::optional<long> k;
    bool orbit = false;
    bool square = false;
    bool serial = false;
    bool exhaustive = false;
};

std::string format_of(const Globals& g, const std::string& fallback) {
    return g.format.empty() ? fallback : g.format;
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (f == a) return;
    throw ParseError("format '" + f + "' is not available for this command");
}

json exact_vec(const Vec& v, size_t from, int precision) {
    json ex = json::array(), dec = json::array();
    for (size_t i = from; i < v.size(); ++i) {
        ex.push_back(v[i].full_str());
        dec.push_back(v[i].decimal(precision));
    }
    return {{"exact", ex}, {"decimal", dec}};
}

json point_json(const ProjectivePoint& p, int precision) { return exact_vec(p.coords, 1, precision); }

std::string digits_str(const std::vector<long>& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

std::string bits_str(const std::vector<int>& b) {
    std::string s;
    for (int x : b) s += static_cast<char>('0' + x);
    return s;
}

Exec exec_of(const Options& o) { return o.serial ? Exec::Serial : Exec::Parallel; }

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void doc(const json& j) { os() << j.dump(2) << "\n"; }
    void line(const json& j) { os() << j.dump() << "\n"; }

private:
    std::ofstream file_;
};

json with_schema(json j) {
    j["schemaVersion"] = kSchemaVersion;
    return j;
}

// ---- verbs

int cmd_sequence(const Globals& g, const Options& o) {
    std::string fmt = format_of(g, "json");
    require_format(fmt, {"json", "text"});
    if (o.points.empty()) throw ParseError("sequence needs at least one --point");
    TripMapSpec m = build_trip_map(o.triple);
    std::vector<ProjectivePoint> pts;
    for (const auto& t : o.points) pts.push_back(parse_point(t));
    std::vector<TripSequence> seqs;
    std::vector<TripRun> runs;
    if (o.orbit) {
        for (const auto& p : pts) runs.push_back(trip_orbit(p, m, o.terms, g.max_steps));
        for (const auto& r : runs) seqs.push_back(r.sequence);
    } else {
        seqs = trip_sequence_batch(pts, m, o.terms, g.max_steps, exec_of(o));
    }
    Output out(g.out);
    for (size_t i = 0; i < pts.size(); ++i) {
        const TripSequence& s = seqs[i];
        TreeSequence tree = trip_to_tree(s);
        if (fmt == "text") {
            out.os() << m.triple.str() << " " << pts[i].str() << ": trip " << digits_str(s.digits) << " tree "
                     << bits_str(tree.bits) << " " << to_string(s.termination) << "\n";
            if (o.orbit)
                for (const auto& q : runs[i].orbit) out.os() << "  " << q.str() << "\n";
            continue;
        }
        json rec = {{"triple", m.triple.str()},
                    {"point", point_json(pts[i], g.precision)},
                    {"trip", s.digits},
                    {"tree", tree.bits},
                    {"termination", to_string(s.termination)}};
        if (o.orbit) {
            json orb = json::array();
            for (const auto& q : runs[i].orbit) orb.push_back(point_json(q, g.precision));
            rec["orbit"] = orb;
        }
        out.line(with_schema(rec));
    }
    return 0;
}

int cmd_tree(const Globals& g, const Options& o) {
    std::string fmt = format_of(g, "json");
    require_format(fmt, {"json", "text"});
    if (o.points.size() != 1) throw ParseError("tree needs exactly one --point");
    TripMapSpec m = build_trip_map(o.triple);
    ProjectivePoint p = parse_point(o.points[0]);
    TreeSequence t = tree_sequence(p, m, o.depth, g.max_steps);
    Output out(g.out);
    if (fmt == "text") {
        out.os() << m.triple.str() << " " << p.str() << ": tree " << bits_str(t.bits) << " "
                 << to_string(t.termination) << "\n";
        return 0;
    }
    out.doc(with_schema({{"triple", m.triple.str()},
                         {"point", point_json(p, g.precision)},
                         {"tree", t.bits},
                         {"termination", to_string(t.termination)}}));
    return 0;
}

int cmd_enumerate(const Globals& g, const Options&) {
    std::string fmt = format_of(g, "json");
    require_format(fmt, {"json", "text"});
    auto family = enumerate_family();
    Output out(g.out);
    json rows = json::array();
    size_t index = 0;
    for (const auto& m : family) {
        ReducedTriple r = reduce_triple(m.triple);
        CatalogEntry c = catalog_lookup(r.triple);
        std::string witness = c.witness ? c.witness->str() : "";
        if (fmt == "text") {
            out.os() << index << "\t" << m.triple.str() << "\t" << m.f0().str() << "\t" << m.f1().str() << "\t"
                     << r.triple.str() << "\t" << to_string(c.verdict) << (witness.empty() ? "" : "\t" + witness)
                     << "\n";
        } else {
            json row = {{"index", index},
                        {"triple", m.triple.str()},
                        {"F0", m.f0().str()},
                        {"F1", m.f1().str()},
                        {"reduced", r.triple.str()},
                        {"rho", r.rho.cycles()},
                        {"verdict", to_string(c.verdict)}};
            row["witness"] = c.witness ? json(witness) : json(nullptr);
            rows.push_back(row);
        }
        ++index;
    }
    if (fmt == "json") out.doc(with_schema({{"count", family.size()}, {"rows", rows}}));
    return 0;
}

json witness_json(const EigenWitness& w, int precision) {
    json j = {{"eigenvalue", {{"exact", w.eigenvalue.str()}, {"decimal", w.eigenvalue.decimal(precision)}}},
              {"eigenvector", exact_vec(w.eigenvector, 0, precision)},
              {"inClosedTriangle", w.in_closed_triangle}};
    if (!w.point.empty()) {
        j["point"] = exact_vec(w.point, 1, precision);
        json mp = json::array();
        for (const auto& p : minimal_polynomial_of_point(w)) mp.push_back(p.str());
        j["minimalPolynomials"] = mp;
    }
    return j;
}

int cmd_classify(const Globals& g, const Options& o) {
    std::string fmt = format_of(g, "json");
    require_format(fmt, {"json", "text"});
    if (o.word.empty()) throw ParseError("classify needs --word");
    TripMapSpec m = build_trip_map(o.triple);
    PeriodicWord w = PeriodicWord::parse(o.word);
    Classification c = classify_word(m, w);
    CatalogEntry cat = catalog_lookup(reduce_triple(m.triple).triple);

    json j = {{"triple", m.triple.str()},
              {"word", w.str()},
              {"verdict", to_string(c.verdict)},
              {"catalogVerdict", to_string(cat.verdict)},
              {"periodMatrix", c.period_matrix.str()},
              {"squaredMatrix", c.squared.str()},
              {"charpoly", c.charpoly.str()},
              {"evidence", c.evidence}};
    if (!c.boundary.empty()) j["boundary"] = c.boundary;
    json ws = json::array();
    for (const auto& x : c.witnesses) ws.push_back(witness_json(x, g.precision));
    j["witnesses"] = ws;
    if (o.square) {
        try {
            json sq = json::array();
            for (const auto& x : eigen_in_triangle(c.squared, MatrixForm::Map)) sq.push_back(witness_json(x, g.precision));
            j["squaredEigen"] = sq;
        } catch (const RepeatedEigenvalueUnresolved& e) {
            j["squaredEigen"] = {{"unresolved", e.what()}};
        }
    }

    Output out(g.out);
    if (fmt == "text") {
        out.os() << m.triple.str() << " word " << w.str() << ": " << to_string(c.verdict)
                 << (c.boundary.empty() ? "" : " (" + c.boundary + ")") << "\n";
        out.os() << "catalog: " << to_string(cat.verdict) << "\n";
        for (const auto& x : c.witnesses) {
            out.os() << "witness eigenvalue " << x.eigenvalue.str();
            if (!x.point.empty()) {
                ProjectivePoint p{x.point};
                out.os() << " point " << p.str() << " ~ (" << x.point[1].decimal(g.precision) << ", "
                         << x.point[2].decimal(g.precision) << ")";
            }
            out.os() << "\n";
        }
        for (const auto& e : c.evidence) out.os() << "  " << e << "\n";
    } else {
        out.doc(with_schema(j));
    }
    if (!o.expect.empty() && o.expect != to_string(c.verdict))
        throw VerificationFailed("expected " + o.expect + ", got " + to_string(c.verdict));
    return 0;
}

int cmd_verify_classical(const Globals& g, const Options& o) {
    std::string fmt = format_of(g, "json");
    require_format(fmt, {"json", "text"});
    std::vector<ClassicalMapId> ids;
    if (o.map == "all")
        ids = {ClassicalMapId::Monkemeyer, ClassicalMapId::Brun, ClassicalMapId::FullySubtractive,
               ClassicalMapId::Guting};
    else
        ids = {parse_classical_map(o.map)};
    Output out(g.out);
    json reports = json::array();
    bool ok = true;
    for (ClassicalMapId id : ids) {
        EquivalenceReport r = verify_equivalence(id, o.samples, o.seed, exec_of(o));
        ok = ok && r.ok();
        if (fmt == "text") {
            out.os() << to_string(id) << ": " << (r.ok() ? "pass" : "FAIL") << " samples " << r.samples
                     << " boundaryHits " << r.boundary_hits << " mismatches " << r.mismatches.size() << "\n";
            for (const auto& mm : r.mismatches)
                out.os() << "  " << mm.point.str() << " classical " << mm.classical << " combo " << mm.combo << "\n";
            continue;
        }
        json mms = json::array();
        for (const auto& mm : r.mismatches)
            mms.push_back({{"point", point_json(mm.point, g.precision)}, {"classical", mm.classical}, {"combo", mm.combo}});
        reports.push_back({{"map", to_string(id)},
                           {"samples", r.samples},
                           {"seed", o.seed},
                           {"boundaryHits", r.boundary_hits},
                           {"mismatches", mms},
                           {"pass", r.ok()}});
    }
    if (fmt == "json") out.doc(with_schema({{"reports", reports}, {"pass", ok}}));
    if (!ok) throw VerificationFailed("classical map and combo disagree");
    return 0;
}

size_t max_render_depth() {
    const char* env = std::getenv("TRIP_MAX_DEPTH");
    if (!env || !*env) return 12;
    try {
        size_t used = 0;
        long v = std::stol(env, &used);
        if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
        return static_cast<size_t>(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("TRIP_MAX_DEPTH must be a nonnegative integer: '") + env + "'");
    }
}

int cmd_render(const Globals& g, const Options& o) {
    std::string fmt = format_of(g, "svg");
    require_format(fmt, {"svg", "json"});
    TripMapSpec m = build_trip_map(o.triple);
    size_t cap = max_render_depth();
    if (o.depth > cap)
        throw DepthExceeded("depth " + std::to_string(o.depth) + " exceeds the cap " + std::to_string(cap) +
                            " (TRIP_MAX_DEPTH)");
    SubdivisionFigure f = subdivision_figure(m, o.depth);
    Rational area = f.total_area();
    Output out(g.out);
    if (fmt == "svg") {
        out.os() << render_svg(f, m.triple.str());
        return 0;
    }
    json tris = json::array();
    for (const auto& t : f.triangles) {
        json ex = json::array(), dec = json::array();
        for (const auto& [x, y] : t.vertices) {
            ex.push_back({to_string(x), to_string(y)});
            dec.push_back({to_decimal(x, g.precision), to_decimal(y, g.precision)});
        }
        tris.push_back({{"word", bits_str(t.word)}, {"vertices", {{"exact", ex}, {"decimal", dec}}}});
    }
    out.doc(with_schema({{"triple", m.triple.str()},
                         {"depth", o.depth},
                         {"areaSum", to_string(area)},
                         {"tiles", area == Rational(1, 2)},
                         {"triangles", tris}}));
    return 0;
}

SimplexPoint parse_simplex_point(const std::string& text, size_t d) {
    Vec c = parse_point_coords(text);
    if (c.size() != d - 1) throw DimensionMismatch();
    Vec all{FieldElement(1)};
    all.insert(all.end(), c.begin(), c.end());
    all = promote(all);
    return SimplexPoint(all.begin() + 1, all.end());
}

int cmd_simplex_apply(const Globals& g, const Options& o) {
    std::string fmt = format_of(g, "json");
    require_format(fmt, {"json", "text"});
    if (o.points.size() != 1) throw ParseError("simplex apply needs exactly one --point");
    SimplexMapSpec s = build_nd(o.dim, o.triple);
    SimplexPoint x = parse_simplex_point(o.points[0], o.dim);
    if (!in_simplex(x)) throw PointOutsideDomain();
    long k = o.k ? *o.k : simplex_index(s, x, g.max_steps);
    Output out(g.out);
    if (k < 0) {
        if (fmt == "text")
            out.os() << "InfiniteOnesTail\n";
        else
            out.doc(with_schema({{"dim", o.dim}, {"triple", s.map.triple.str()}, {"point", exact_vec(x, 0, g.precision)},
                                 {"termination", to_string(Termination::InfiniteOnesTail)}}));
        return 0;
    }
    SimplexPoint y = simplex_apply(s, k, x);
    if (fmt == "text") {
        out.os() << "k " << k << " image";
        for (const auto& c : y) out.os() << " " << c.str();
        out.os() << "\n";
        return 0;
    }
    out.doc(with_schema({{"dim", o.dim},
                         {"triple", s.map.triple.str()},
                         {"point", exact_vec(x, 0, g.precision)},
                         {"k", k},
                         {"image", exact_vec(y, 0, g.precision)}}));
    return 0;
}

int cmd_simplex_sequence(const Globals& g, const Options& o) {
    std::string fmt = format_of(g, "json");
    require_format(fmt, {"json", "text"});
    if (o.points.size() != 1) throw ParseError("simplex sequence needs exactly one --point");
    SimplexMapSpec s = build_nd(o.dim, o.triple);
    SimplexPoint x = parse_simplex_point(o.points[0], o.dim);
    TripSequence seq = simplex_sequence(x, s, o.terms, g.max_steps);
    Output out(g.out);
    if (fmt == "text") {
        out.os() << digits_str(seq.digits) << " " << to_string(seq.termination) << "\n";
        return 0;
    }
    out.doc(with_schema({{"dim", o.dim},
                         {"triple", s.map.triple.str()},
                         {"point", exact_vec(x, 0, g.precision)},
                         {"trip", seq.digits},
                         {"termination", to_string(seq.termination)}}));
    return 0;
}

int cmd_count(const Globals& g, const Options& o) {
    std::string fmt = format_of(g, "json");
    require_format(fmt, {"json", "text"});
    if (o.dim < 3) throw DimensionTooSmall();
    Integer fact = 1;
    for (size_t i = 2; i <= o.dim; ++i) fact *= static_cast<unsigned long>(i);
    Integer family = fact * fact * fact;
    json j = {{"dim", o.dim}, {"familySize", family.get_str()}, {"uniqueCountBound", unique_count_bound(o.dim).get_str()}};
    bool sweep = o.dim <= 4 || o.exhaustive;
    if (sweep && o.dim > 5)
        throw DepthExceeded("exhaustive sweep is limited to d <= 5 (" + family.get_str() + " triples requested)");
    if (sweep) {
        DuplicateReport r = duplicate_class_count(o.dim, exec_of(o));
        j["classes"] = r.classes;
        j["largestClass"] = r.largest_class;
    }
    j["exhaustive"] = sweep;
    Output out(g.out);
    if (fmt == "text") {
        out.os() << "d " << o.dim << " family " << family.get_str() << " bound " << unique_count_bound(o.dim).get_str();
        if (sweep) out.os() << " classes " << j["classes"].get<size_t>() << " largest " << j["largestClass"].get<size_t>();
        out.os() << "\n";
        return 0;
    }
    out.doc(with_schema(j));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trip: TRIP maps, triangle sequences and their periodicity"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    Options o;
    app.add_option("--format", g.format, "json | text | svg")->check(CLI::IsMember({"json", "text", "svg"}));
    app.add_option("--out", g.out, "write output to a file");
    app.add_option("--precision", g.precision, "decimal digits")->check(CLI::Range(1, 200));
    app.add_option("--max-steps", g.max_steps, "cap on consecutive 1-bits and orbit steps")->check(CLI::PositiveNumber);

    std::function<int()> run;
    auto verb = [&](const char* name, const char* help, auto fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->callback([&, fn] { run = [&, fn] { return fn(g, o); }; });
        return sub;
    };
    auto add_triple = [&](CLI::App* s) { s->add_option("--triple", o.triple, "(sigma,tau0,tau1)"); };

    auto* seq = verb("sequence", "trip and tree sequences of points", cmd_sequence);
    add_triple(seq);
    seq->add_option("--point", o.points, "\"x,y\" or \"alg(poly; lo,hi)[x, y]\"")->required();
    seq->add_option("--terms", o.terms, "number of trip digits");
    seq->add_flag("--orbit", o.orbit, "include the orbit points");
    seq->add_flag("--serial", o.serial, "use the serial kernel");

    auto* tree = verb("tree", "tree sequence of a point", cmd_tree);
    add_triple(tree);
    tree->add_option("--point", o.points, "point")->required();
    tree->add_option("--depth", o.depth, "number of bits");

    verb("enumerate", "all 216 maps with F0, F1 and catalog verdicts", cmd_enumerate);

    auto* cls = verb("classify", "classify a periodic tree word", cmd_classify);
    add_triple(cls);
    cls->add_option("--word", o.word, "period, or preperiod;period")->required();
    cls->add_flag("--square", o.square, "also report eigenvectors of the squared period matrix");
    cls->add_option("--expect", o.expect, "exit 5 unless the verdict matches")
        ->check(CLI::IsMember({"UniquePoint", "LineSegment", "DegenerateEdge", "Undetermined"}));

    auto* ver = verb("verify-classical", "check a classical map against its combo", cmd_verify_classical);
    ver->add_option("--map", o.map, "brun | monkemeyer | fully-subtractive | guting | all");
    ver->add_option("--samples", o.samples, "random rational points")->check(CLI::PositiveNumber);
    ver->add_option("--seed", o.seed, "sampling seed");
    ver->add_flag("--serial", o.serial, "use the serial kernel");

    auto* ren = verb("render", "draw the depth-n subdivision", cmd_render);
    add_triple(ren);
    ren->add_option("--depth", o.depth, "word length");

    CLI::App* sim = app.add_subcommand("simplex", "maps on the (d-1)-simplex");
    sim->require_subcommand(1);
    auto simplex_verb = [&](const char* name, const char* help, auto fn) {
        CLI::App* sub = sim->add_subcommand(name, help);
        sub->fallthrough();
        sub->callback([&, fn] { run = [&, fn] { return fn(g, o); }; });
        sub->add_option("--dim", o.dim, "matrix dimension d >= 3")->required();
        return sub;
    };
    auto* sap = simplex_verb("apply", "apply the triangle function", cmd_simplex_apply);
    sap->add_option("--triple", o.triple, "(sigma,tau0,tau1) in S_d");
    sap->add_option("--point", o.points, "d-1 coordinates")->required();
    sap->add_option("--k", o.k, "index k; defaults to the Sigma_k holding the point");
    auto* sseq = simplex_verb("sequence", "trip sequence on the simplex", cmd_simplex_sequence);
    sseq->add_option("--triple", o.triple, "(sigma,tau0,tau1) in S_d");
    sseq->add_option("--point", o.points, "d-1 coordinates")->required();
    sseq->add_option("--terms", o.terms, "number of digits");
    auto* scnt = simplex_verb("count", "family size, bound and distinct (M0, M1) pairs", cmd_count);
    scnt->add_flag("--exhaustive", o.exhaustive, "sweep above d = 4");
    scnt->add_flag("--serial", o.serial, "use the serial kernel");

    auto* cnt = verb("count", "family size, bound and distinct (M0, M1) pairs", cmd_count);
    cnt->add_option("--dim", o.dim, "matrix dimension d >= 3");
    cnt->add_flag("--exhaustive", o.exhaustive, "sweep above d = 4");
    cnt->add_flag("--serial", o.serial, "use the serial kernel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "trip: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "trip: parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DepthExceeded& e) {
        std::cerr << "trip: " << e.what() << "\n";
        return kExitDepth;
    } catch (const VerificationFailed& e) {
        std::cerr << "trip: verification failed: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::domain_error& e) {
        std::cerr << "trip: domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "trip: domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "trip: " << e.what() << "\n";
        return 1;
    }
}
