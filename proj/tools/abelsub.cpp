#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "abelsub/algebra_io.hpp"
#include "abelsub/bsub_file.hpp"
#include "abelsub/oml.hpp"
#include "abelsub/pipeline.hpp"
#include "abelsub/reconstruct.hpp"
#include "abelsub/text_formats.hpp"

using namespace abelsub;
using json = nlohmann::ordered_json;

namespace {

struct Out {
    std::ostringstream text;
    json data = json::object();
};

bool is_algebra_file(const std::string& path, const std::string& text) {
    auto ends = [&](const char* ext) {
        std::string e(ext);
        return path.size() >= e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0;
    };
    return ends(".yaml") || ends(".yml") || text.find("summands:") != std::string::npos;
}

int cmd_verify(const std::string& path, Out& out) {
    std::string text = read_file(path);
    if (is_algebra_file(path, text)) {
        AlgebraFile f = parse_algebra(text, path);
        out.data["kind"] = "algebra";
        out.text << "algebra with summands";
        for (auto n : f.algebra.summand_dims()) out.text << ' ' << n;
        out.text << '\n';
        json parts = json::array();
        bool ok = true;
        for (const auto& [name, atoms] : f.partitions) {
            json p{{"name", name}};
            try {
                PartitionOfUnity::make(f.algebra, atoms);
                out.text << "PASS partition " << name << " (" << atoms.size() << " atoms)\n";
                p["ok"] = true;
            } catch (const AlgebraError& e) {
                out.text << "FAIL partition " << name << ": " << e.what() << '\n';
                p["ok"] = false;
                p["witness"] = e.what();
                ok = false;
            }
            parts.push_back(p);
        }
        if (ok) {
            try {
                f.fragment();
            } catch (const AlgebraError& e) {
                out.text << "FAIL fragment: " << e.what() << '\n';
                out.data["witness"] = e.what();
                ok = false;
            }
        }
        out.data["partitions"] = parts;
        out.data["ok"] = ok;
        return ok ? 0 : 1;
    }
    TextKind kind = detect_kind(text);
    try {
        switch (kind) {
        case TextKind::oml: {
            out.data["kind"] = "oml";
            Oml l = parse_oml(text, path);
            out.text << "PASS orthomodular lattice with " << l.size() << " elements, " << blocks(l).size() << " blocks\n";
            out.data["elements"] = l.size();
            break;
        }
        case TextKind::greechie: {
            out.data["kind"] = "greechie";
            Oml l = from_greechie(parse_greechie(text, path));
            out.text << "PASS pasting is an orthomodular lattice with " << l.size() << " elements\n";
            out.data["elements"] = l.size();
            break;
        }
        case TextKind::poset: {
            out.data["kind"] = "poset";
            Poset p = parse_poset(text, path);
            out.text << "PASS poset with " << p.size() << " elements\n";
            out.data["elements"] = p.size();
            break;
        }
        default:
            throw ParseError(path + ": cannot tell the file format");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        out.text << "FAIL " << e.what() << '\n';
        out.data["ok"] = false;
        out.data["witness"] = e.what();
        return 1;
    }
    out.data["ok"] = true;
    return 0;
}

OmlPtr oml_input(const std::string& path, const std::vector<std::string>& std_spec) {
    if (!std_spec.empty()) {
        std::size_t n = 0;
        try {
            n = std::stoul(std_spec.at(1));
        } catch (const std::exception&) {
            throw ParseError("--standard needs a name and a size");
        }
        try {
            return std::make_shared<const Oml>(standard(std_spec[0], n));
        } catch (const OmlError& e) {
            throw ParseError(e.what());
        }
    }
    if (path.empty()) throw ParseError("give a lattice file or --standard NAME N");
    return std::make_shared<const Oml>(load_oml(path));
}

int cmd_bsub(const std::string& path, const std::vector<std::string>& std_spec, const std::string& dot,
             std::size_t max_size, Out& out) {
    OmlPtr l;
    try {
        l = oml_input(path, std_spec);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        out.text << "FAIL " << e.what() << '\n';
        out.data["witness"] = e.what();
        return 1;
    }
    if (l->size() > max_size) {
        out.text << "FAIL lattice has " << l->size() << " elements, above --max-size " << max_size << '\n';
        return 1;
    }
    BsubPoset b = boolean_subalgebras(l);
    out.text << "subalgebras " << b.size() << '\n';
    json subs = json::array();
    for (std::size_t i = 0; i < b.size(); ++i) {
        out.text << b.poset->name(i) << ' ' << b.describe(i) << '\n';
        subs.push_back({{"id", b.poset->name(i)}, {"members", b.describe(i)}});
    }
    json covers = json::array();
    for (auto [lo, hi] : b.poset->cover_pairs()) {
        out.text << "cover " << b.poset->name(lo) << ' ' << b.poset->name(hi) << '\n';
        covers.push_back({b.poset->name(lo), b.poset->name(hi)});
    }
    out.data["count"] = b.size();
    out.data["subalgebras"] = subs;
    out.data["covers"] = covers;
    if (!dot.empty()) {
        std::ofstream f(dot, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + dot + "'");
        f << write_bsub_dot(b);
        out.data["dot"] = dot;
    }
    return 0;
}

PosetPtr order_input(const std::string& path) {
    std::string text = read_file(path);
    switch (detect_kind(text)) {
    case TextKind::poset:
        return std::make_shared<const Poset>(parse_poset(text, path));
    case TextKind::oml:
        return parse_oml(text, path).order_ptr();
    case TextKind::greechie:
        return from_greechie(parse_greechie(text, path)).order_ptr();
    default:
        throw ParseError(path + ": cannot tell the file format");
    }
}

int cmd_iso(const std::string& a, const std::string& b, std::size_t max_size, Out& out) {
    PosetPtr p, q;
    try {
        p = order_input(a);
        q = order_input(b);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        out.text << "FAIL " << e.what() << '\n';
        return 1;
    }
    auto isos = enumerate_order_isos(p, q);
    out.text << "isomorphisms " << isos.size() << '\n';
    json list = json::array();
    for (std::size_t k = 0; k < isos.size() && k < max_size; ++k) {
        json m = json::object();
        for (std::size_t x = 0; x < p->size(); ++x) {
            out.text << (x ? ", " : "") << p->name(x) << "->" << q->name(isos[k](x));
            m[p->name(x)] = q->name(isos[k](x));
        }
        out.text << '\n';
        list.push_back(m);
    }
    if (isos.size() > max_size) out.text << "(" << isos.size() - max_size << " more not shown)\n";
    out.data["count"] = isos.size();
    out.data["isomorphisms"] = list;
    return 0;
}

int cmd_reconstruct(const std::string& path, bool certify, Out& out) {
    BsubIso j = [&] {
        try {
            return load_bsub_iso(path);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }();
    std::vector<OmlIso> ks;
    try {
        ks = reconstruct_oml_isos(j);
    } catch (const ReconstructError& e) {
        if (e.code() != "NoSolution") throw;
    }
    out.text << "reconstructions " << ks.size() << '\n';
    json list = json::array();
    for (const auto& k : ks) {
        out.text << "  " << k.describe() << '\n';
        list.push_back(k.describe());
    }
    out.data["count"] = ks.size();
    out.data["reconstructions"] = list;
    out.data["four_element_blocks"] = has_4element_block(*j.left().oml);
    if (!certify) return 0;
    try {
        certify_unique(j);
        out.text << "PASS unique\n";
        out.data["certified"] = true;
        return 0;
    } catch (const ReconstructError& e) {
        out.text << "FAIL " << e.what() << '\n';
        out.data["certified"] = false;
        out.data["witness"] = e.what();
        return 1;
    }
}

json report_json(const Report& r) {
    json a = json::array();
    for (const auto& f : r.findings) a.push_back({{"property", f.property}, {"pass", f.pass}, {"witness", f.witness}});
    return a;
}

int cmd_pipeline(const std::string& path, bool diagnostic, const std::string& map_out, std::size_t max_size, Out& out) {
    TheoremInstance t = [&] {
        try {
            return load_instance(path);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(path + ": " + e.what());
        }
    }();
    PipelineOptions opt;
    opt.diagnostic = diagnostic;
    opt.max_size = max_size;
    PipelineResult r = run_pipeline_traced(t, opt);
    for (const auto& l : r.log) out.text << l << '\n';
    for (const auto& w : r.warnings) out.text << "warning: " << w << '\n';
    out.data["log"] = r.log;
    out.data["warnings"] = r.warnings;
    out.data["candidates"] = r.candidates.size();
    if (!r.F) {
        out.text << "FAIL AmbiguousReconstruction: " << r.candidates.size()
                 << " candidates; uniqueness needs a lattice without any 4-element blocks\n";
        json list = json::array();
        for (std::size_t c = 0; c < r.candidates.size(); ++c) {
            const auto& cand = r.candidates[c];
            out.text << "candidate " << c + 1 << ": " << cand.k.describe() << '\n';
            json cj{{"k", cand.k.describe()}};
            if (diagnostic) {
                if (cand.map) {
                    out.text << write_map(*cand.map);
                    cj["map"] = write_map(*cand.map);
                } else {
                    out.text << "  no Jordan map: " << cand.error << '\n';
                    cj["error"] = cand.error;
                }
            }
            list.push_back(cj);
        }
        out.data["error"] = "AmbiguousReconstruction";
        out.data["candidate_list"] = list;
        out.data["ok"] = false;
        return diagnostic ? 0 : 1;
    }
    Report claims = verify_claims(t, *r.F);
    Report uniq = verify_uniqueness(t, *r.F, opt);
    out.text << claims.to_text() << uniq.to_text();
    out.data["claims"] = report_json(claims);
    out.data["uniqueness"] = report_json(uniq);
    bool ok = claims.ok() && uniq.ok();
    out.data["ok"] = ok;
    if (!map_out.empty()) {
        std::ofstream f(map_out, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + map_out + "'");
        f << write_map(*r.F);
    }
    return ok ? 0 : 1;
}

std::size_t bell_number(std::size_t n) {
    // Bell triangle
    std::vector<std::size_t> row{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> next{row.back()};
        for (std::size_t x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

int cmd_bell_check(std::size_t max_n, Out& out) {
    bool ok = true;
    std::vector<BsubPoset> subs;
    json rows = json::array();
    for (std::size_t n = 1; n <= max_n; ++n) {
        subs.push_back(boolean_subalgebras(std::make_shared<const Oml>(standard("boolean", n))));
        std::size_t got = subs.back().size(), want = bell_number(n);
        bool match = got == want;
        ok = ok && match;
        out.text << (match ? "PASS" : "FAIL") << " boolean(" << n << ") " << (std::size_t{1} << n) << " elements: "
                 << got << " subalgebras, Bell(" << n << ") = " << want << '\n';
        rows.push_back({{"atoms", n}, {"subalgebras", got}, {"bell", want}});
    }
    bool sachs = true;
    for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = 0; b < subs.size(); ++b) {
            bool iso = !enumerate_order_isos(subs[a].poset, subs[b].poset).empty();
            if (iso != (a == b)) sachs = false;
        }
    out.text << (sachs ? "PASS" : "FAIL") << " BSub posets are isomorphic exactly when the algebras are\n";
    out.data["rows"] = rows;
    out.data["sachs"] = sachs;
    out.data["ok"] = ok && sachs;
    return ok && sachs ? 0 : 1;
}

int cmd_counterexample(Out& out) {
    json rows = json::array();
    bool shown = true;
    for (std::size_t n : {2, 3}) {
        auto b = boolean_subalgebras(std::make_shared<const Oml>(standard("mo", n)));
        auto ks = reconstruct_oml_isos(BsubIso::identity(b));
        out.text << "mo(" << n << "): identity on BSub is induced by " << ks.size() << " lattice isomorphisms\n";
        for (const auto& k : ks) out.text << "  " << k.describe() << '\n';
        shown = shown && ks.size() > 1;
        rows.push_back({{"n", n}, {"reconstructions", ks.size()}});
    }
    out.data["rows"] = rows;
    out.data["ok"] = shown;
    return shown ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian subalgebras, orthomodular lattices and Jordan maps"};
    app.require_subcommand(1);
    std::string format = "text";
    std::size_t max_size = 512;
    app.add_option("--format", format, "text or machine (JSON)")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--max-size", max_size, "cap on enumerated or generated structures");

    std::string path, path2, dot, map_out;
    std::vector<std::string> std_spec;
    bool certify = false, diagnostic = false;
    std::size_t bell_max = 4;

    auto* verify = app.add_subcommand("verify", "check an OML, Greechie, poset or algebra file");
    verify->add_option("path", path)->required();
    auto* bsub = app.add_subcommand("bsub", "enumerate Boolean subalgebras");
    bsub->add_option("path", path);
    bsub->add_option("--standard", std_spec, "NAME N, e.g. boolean 3")->expected(2);
    bsub->add_option("--dot", dot, "write the cover graph");
    auto* iso = app.add_subcommand("iso", "order isomorphisms between two files");
    iso->add_option("left", path)->required();
    iso->add_option("right", path2)->required();
    auto* rec = app.add_subcommand("reconstruct", "lattice isomorphisms inducing a BSub isomorphism");
    rec->add_option("path", path)->required();
    rec->add_flag("--certify", certify, "fail unless exactly one exists");
    auto* pipe = app.add_subcommand("pipeline", "reconstruct a Jordan map from a fragment map");
    pipe->add_option("path", path)->required();
    pipe->add_flag("--diagnostic", diagnostic, "list every candidate instead of failing");
    pipe->add_option("--map-out", map_out, "write the reconstructed map");
    auto* bell = app.add_subcommand("bell-check", "subalgebra counts of Boolean algebras against Bell numbers");
    bell->add_option("--max", bell_max, "largest atom count");
    auto* cex = app.add_subcommand("counterexample", "ambiguity on lattices with 4-element blocks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Out out;
    int code = 0;
    std::string verb = app.get_subcommands().front()->get_name();
    out.data["verb"] = verb;
    try {
        if (verify->parsed()) code = cmd_verify(path, out);
        else if (bsub->parsed()) code = cmd_bsub(path, std_spec, dot, max_size, out);
        else if (iso->parsed()) code = cmd_iso(path, path2, max_size, out);
        else if (rec->parsed()) code = cmd_reconstruct(path, certify, out);
        else if (pipe->parsed()) code = cmd_pipeline(path, diagnostic, map_out, max_size, out);
        else if (bell->parsed()) code = cmd_bell_check(bell_max, out);
        else if (cex->parsed()) code = cmd_counterexample(out);
    } catch (const ParseError& e) {
        out.text << "error: " << e.what() << '\n';
        out.data["error"] = e.what();
        code = 2;
    } catch (const Error& e) {
        out.text << "FAIL " << e.what() << '\n';
        out.data["error"] = e.what();
        code = 1;
    }
    out.data["exit"] = code;
    if (format == "machine")
        std::cout << out.data.dump(2) << '\n';
    else
        std::cout << out.text.str();
    return code;
}
