#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqfpd/error.hpp"
#include "sqfpd/io.hpp"

namespace sqfpd::cli {

namespace {

struct Settings {
    std::string input;
    std::string format = "auto";
    std::string out_format = "json";
    std::string out_path;
    std::string labels_path;
    std::string model = "crosscut";
    unsigned field_char = 2;
    bool strict = false;
    bool verify = false;
    bool trace = false;
    bool multidegrees = false;
};

struct Input {
    std::string kind;   // ideal, hypergraph, lattice
    std::optional<MonomialIdeal> ideal;
    std::optional<Hypergraph> hypergraph;
    std::optional<SetFamilyLattice> lattice;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("io", "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --in is a path when such a file exists, otherwise inline text.
std::string input_text(const std::string& in)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(in, ec))
        return read_file(in);
    return in;
}

json parse_json(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error("invalid_json", "input is not valid JSON");
    return j;
}

Input load(const Settings& s)
{
    std::string text = input_text(s.input);
    std::string format = s.format;
    json j;
    if (format == "auto") {
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            j = parse_json(text);
            format = j.contains("mu") ? "hypergraph-json" : j.contains("atoms") ? "lattice-json" : "ideal-json";
        } else {
            format = "ideal-text";
        }
    } else if (format != "ideal-text") {
        j = parse_json(text);
    }

    Input in;
    if (format == "ideal-text" || format == "ideal-json") {
        in.kind = "ideal";
        in.ideal = format == "ideal-text" ? parse_ideal(text) : ideal_from_json(j);
        in.hypergraph = dual_hypergraph(*in.ideal);
    } else if (format == "hypergraph-json") {
        in.kind = "hypergraph";
        in.hypergraph = hypergraph_from_json(j);
    } else {
        in.kind = "lattice";
        in.lattice = lattice_from_json(j);
    }
    return in;
}

const Hypergraph& need_hypergraph(const Input& in)
{
    if (!in.hypergraph)
        throw Error("wrong_input", "this command needs an ideal or a hypergraph");
    return *in.hypergraph;
}

OracleOptions oracle_options(const Settings& s)
{
    if (!is_prime(s.field_char))
        throw Error("invalid_characteristic", std::to_string(s.field_char) + " is not prime");
    OracleOptions o;
    o.field_char = s.field_char;
    o.model = s.model == "order" ? IntervalModel::order : IntervalModel::crosscut;
    return o;
}

json warnings_of(const Input& in)
{
    json w = json::array();
    if (in.ideal)
        for (const auto& msg : in.ideal->warnings())
            w.push_back(msg);
    return w;
}

json trace_array(const ReductionTrace& trace)
{
    json a = json::array();
    for (const TraceStep& step : trace.steps)
        a.push_back(trace_step_to_json(step));
    return a;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

std::string cmd_pd(const Settings& s, const Input& in)
{
    PdOptions o;
    o.verify = s.verify;
    o.oracle = oracle_options(s);
    const Hypergraph& h = need_hypergraph(in);
    if (s.strict)
        remove_union_edges(h, true);
    PdResult r = pd(h, o);
    if (s.out_format == "text") {
        std::string out = "pd(R/I) = " + std::to_string(r.pd);
        if (r.per_component.size() > 1) {
            out += " =";
            for (std::size_t i = 0; i < r.per_component.size(); ++i)
                out += (i ? " + " : " ") + std::to_string(r.per_component[i].pd);
        }
        return out + "\n";
    }
    json j = pd_result_to_json(r);
    if (s.trace)
        j["trace"] = trace_array(r.trace);
    if (!warnings_of(in).empty())
        j["warnings"] = warnings_of(in);
    return render(j);
}

std::string cmd_hypergraph(const Settings& s, const Input& in)
{
    const Hypergraph& h = need_hypergraph(in);
    if (s.out_format == "dot")
        return hypergraph_to_dot(h);
    return render(hypergraph_to_json(h));
}

std::string cmd_lattice(const Settings& s, const Input& in)
{
    SetFamilyLattice l = in.lattice ? *in.lattice
                         : in.ideal ? lcm_lattice(*in.ideal)
                                    : lattice_from_hypergraph(in.hypergraph->compacted());
    if (s.out_format == "dot")
        return hasse_to_dot(l);
    json j = lattice_to_json(l);
    if (s.out_format == "text")
        return std::to_string(l.size()) + " elements\n" + j["elements"].dump() + "\n";
    return render(j);
}

std::string cmd_reduce(const Settings& s, const Input& in)
{
    const Hypergraph& h = need_hypergraph(in);
    if (s.strict)
        remove_union_edges(h, true);
    Reduced r = full_reduce(h);
    if (s.out_format == "text")
        return trace_to_jsonl(r.trace);
    if (s.out_format == "dot")
        return hypergraph_to_dot(r.hypergraph);
    json survivors = json::array();
    for (VertexSet f : r.survivors)
        survivors.push_back(labels_of(f));
    return render({{"hypergraph", hypergraph_to_json(r.hypergraph)},
                   {"trace", trace_array(r.trace)},
                   {"survivors", survivors},
                   {"replay_ok", replay(h, r.trace) == r.hypergraph}});
}

std::string cmd_betti(const Settings& s, const Input& in)
{
    BettiTable t = in.lattice ? betti_table(*in.lattice, oracle_options(s))
                   : in.ideal ? betti_table(*in.ideal, oracle_options(s))
                              : betti_table(*in.hypergraph, oracle_options(s));
    if (s.out_format == "text") {
        std::string out;
        for (const auto& [i, total] : t.totals)
            out += "beta_" + std::to_string(i) + " = " + std::to_string(total) + "\n";
        return out + "pd = " + std::to_string(t.pd()) + "\n";
    }
    return render(betti_to_json(t, s.multidegrees));
}

std::string cmd_coordinatize(const Settings& s, const Input& in)
{
    std::string ideal_text;
    json j;
    if (in.lattice) {
        if (s.labels_path.empty())
            throw Error("missing_labels", "coordinatize on a lattice needs --labels");
        Labeling lab = labeling_from_json(parse_json(input_text(s.labels_path)));
        ExponentIdeal ideal = coordinatize(*in.lattice, lab);
        ideal_text = ideal.to_string();
        json gens = json::array();
        for (const auto& g : ideal.generators)
            gens.push_back(monomial_to_string(g, ideal.variables));
        j = {{"variables", ideal.variables}, {"generators", gens}, {"square_free", ideal.is_square_free()}};
    } else {
        HypergraphCoordinatization c = hypergraph_coordinatization(need_hypergraph(in).compacted());
        ideal_text = c.ideal.to_string();
        j = {{"ideal", ideal_to_json(c.ideal)}, {"labeling", labeling_to_json(c.labeling)}};
    }
    if (s.out_format == "text")
        return ideal_text + "\n";
    j["text"] = ideal_text;
    return render(j);
}

std::string cmd_check(const Settings&, const Input& in)
{
    json report = json::object();
    if (in.hypergraph) {
        const Hypergraph& h = *in.hypergraph;
        report["separated"] = is_separated(h);
        report["preconditions"] = preconditions_to_json(check_preconditions(h));
        json shapes = json::array();
        for (const Hypergraph& c : components(h))
            shapes.push_back(std::string(to_string(classify_shape(c).kind)));
        report["component_shapes"] = shapes;
        json unions = json::array();
        for (VertexSet f : union_edge_elements(h))
            unions.push_back(labels_of(f));
        report["union_edges"] = unions;
        if (report["separated"].get<bool>())
            report["meet_irreducible_generation"] =
                check_meet_irreducible_generation(lattice_from_hypergraph(h.compacted()));
    } else {
        report["meet_irreducible_generation"] = check_meet_irreducible_generation(*in.lattice);
    }
    if (!warnings_of(in).empty())
        report["warnings"] = warnings_of(in);
    return render(report);
}

unsigned default_char()
{
    if (const char* env = std::getenv("SQFPD_CHAR")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            return 0;   // rejected later as not prime
        }
    }
    return 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Projective dimension and Betti numbers of square-free monomial ideals", "sqfpd"};
    app.require_subcommand(1, 1);
    Settings s;
    s.field_char = default_char();

    struct Command {
        const char* name;
        const char* help;
        std::string (*fn)(const Settings&, const Input&);
    };
    const Command commands[] = {
        {"pd", "projective dimension of R/I by reduction, formulas and the oracle", cmd_pd},
        {"hypergraph", "dual hypergraph of an ideal", cmd_hypergraph},
        {"lattice", "LCM lattice of an ideal or hypergraph", cmd_lattice},
        {"reduce", "reduce a hypergraph and print the trace", cmd_reduce},
        {"betti", "total Betti numbers from lattice homology", cmd_betti},
        {"coordinatize", "ideal of a labeled lattice, or of a hypergraph", cmd_coordinatize},
        {"check", "separatedness, reduction preconditions and lattice checks", cmd_check},
    };
    for (const Command& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--in", s.input, "ideal text, or a path to a text or JSON file")->required();
        sub->add_option("--format", s.format, "input format")
            ->check(CLI::IsMember({"auto", "ideal-text", "ideal-json", "hypergraph-json", "lattice-json"}));
        sub->add_option("--out-format", s.out_format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--out", s.out_path, "write output to this file");
        sub->add_option("--char", s.field_char, "field characteristic (default $SQFPD_CHAR or 2)");
        sub->add_option("--model", s.model, "interval complex")->check(CLI::IsMember({"crosscut", "order"}));
        sub->add_flag("--strict", s.strict, "fail on higher edges that are not unions");
        sub->add_flag("--verify", s.verify, "run the oracle on formula components too");
        sub->add_flag("--trace", s.trace, "include the reduction trace");
        sub->add_flag("--multidegrees", s.multidegrees, "include per-element Betti numbers");
        if (std::string(c.name) == "coordinatize")
            sub->add_option("--labels", s.labels_path, "labeling JSON (path or inline)");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const Command* command = nullptr;
    for (const Command& c : commands)
        if (chosen->get_name() == c.name)
            command = &c;

    try {
        oracle_options(s);
        Input in = load(s);
        std::string text = command->fn(s, in);
        if (s.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(s.out_path, std::ios::binary);
            if (!f)
                throw Error("io", "cannot write " + s.out_path);
            f << text;
        }
        return 0;
    } catch (const Error& e) {
        json j = {{"error", e.kind()}, {"message", e.what()}};
        if (const auto* pe = dynamic_cast<const ParseError*>(&e))
            j["position"] = pe->position();
        err << j.dump() << "\n";
        return 1;
    }
}

} // namespace sqfpd::cli
