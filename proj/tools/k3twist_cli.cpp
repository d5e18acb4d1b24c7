// k3twist: command-line front end. Each subcommand reads one JSON document
// (file path or "-" for stdin) and writes one JSON document to stdout.
//
// Exit status: 0 success, 2 malformed input, 3 violated mathematical
// precondition.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "k3twist/json_io.hpp"

namespace {

using namespace k3twist;
using namespace k3twist::json_io;

struct Options {
    SurfaceType surface = SurfaceType::k3;
};

using Handler = std::function<json(const json&, const Options&)>;

const char* ordering_name(std::strong_ordering o) {
    if (o == std::strong_ordering::less)
        return "less";
    if (o == std::strong_ordering::greater)
        return "greater";
    return "equal";
}

json lattice_summary(const Lattice& l) {
    json out = {{"lattice", encode(l)},
                {"rank", l.rank()},
                {"signature", encode(signature(l.gram()))},
                {"even", l.is_even()}};
    if (determinant(l.gram()) != 0)
        out["discriminant_group"] = encode(discriminant_group(l.gram()));
    else
        out["discriminant_group"] = nullptr;
    return out;
}

BField bfield_or_zero(const json& in, std::size_t h2_rank) {
    if (in.contains("b"))
        return decode_bfield(in["b"]);
    return BField{IntVec(h2_rank), 1};
}

json walls_json(const std::vector<Wall>& walls) {
    json out = json::array();
    for (const auto& w : walls)
        out.push_back(encode(w));
    return out;
}

WallQuery point_query(const json& in) {
    json q = in;
    if (!q.contains("H0"))
        q["H0"] = field(in, "H");
    return decode_wall_query(q);
}

std::map<std::string, Handler> handlers() {
    std::map<std::string, Handler> h;

    h["pairing"] = [](const json& in, const Options&) {
        const Lattice ns = decode_lattice(field(in, "ns"));
        return encode(mukai_pairing(decode_mukai(field(in, "v")), decode_mukai(field(in, "w")), ns));
    };
    h["twist"] = [](const json& in, const Options&) {
        const Lattice ns = decode_lattice(field(in, "ns"));
        return encode(exp_twist(decode_mukai(field(in, "v")), decode_rat_vec(field(in, "B")), ns));
    };
    h["chern"] = [](const json& in, const Options& opt) {
        const Lattice ns = decode_lattice(field(in, "ns"));
        return encode(mukai_from_chern(decode_int(field(in, "r")), decode_int_vec(field(in, "c1")),
                                       decode_int(field(in, "c2")), ns, opt.surface));
    };
    h["untwist"] = [](const json& in, const Options&) {
        const Sublattice ns = decode_sublattice(field(in, "ns"));
        const BField b = decode_bfield(field(in, "b"));
        const Int rg = in.contains("rG") ? decode_int(in["rG"]) : b.r;
        const Untwisted u = untwist(decode_mukai(field(in, "v")), b, rg, ns);
        return json{{"D", encode(u.d_vector)},
                    {"w_class", u.w_class ? encode(*u.w_class) : json(nullptr)},
                    {"integral", u.integral}};
    };
    h["primitive"] = [](const json& in, const Options&) {
        const PrimitivePart p = primitive_part(decode_mukai(field(in, "v")));
        return json{{"v0", encode(p.primitive)}, {"content", encode(p.content)}};
    };
    h["c2-residue"] = [](const json& in, const Options&) {
        const Int r = decode_int(field(in, "r"));
        const Int res = expected_c2_residue(r, decode_int_vec(field(in, "w")), decode_lattice(field(in, "ns")));
        return json{{"residue", encode(res)}, {"modulus", encode(Int(2 * r))}};
    };
    h["extension-defect"] = [](const json& in, const Options&) {
        const ExtensionDefect d =
            extension_defect(decode_mukai(field(in, "v1")), decode_mukai(field(in, "v2")), decode_int(field(in, "l1")),
                             decode_int(field(in, "l2")), decode_mukai(field(in, "vF1")),
                             decode_mukai(field(in, "vF2")), decode_lattice(field(in, "ns")));
        return json{{"lhs", encode(d.lhs)}, {"rhs", encode(d.rhs)}};
    };
    h["bogomolov"] = [](const json& in, const Options&) {
        const Lattice ns = decode_lattice(field(in, "ns"));
        const MukaiVector v = decode_mukai(field(in, "v"));
        return json{{"holds", bogomolov_check(v, decode_int(field(in, "l")), ns)},
                    {"v2", encode(mukai_pairing(v, v, ns))}};
    };
    h["stability-compare"] = [](const json& in, const Options&) {
        const HilbertCoeffs f = decode_hilbert(field(in, "f"));
        const HilbertCoeffs e = decode_hilbert(field(in, "e"));
        json out = {{"order", ordering_name(stability_compare(f, e))}};
        if (in.contains("lambda"))
            out["type_lambda"] = type_lambda_compare(f, e, decode_rat(in["lambda"])) != std::strong_ordering::greater;
        return out;
    };
    h["brauer-order"] = [](const json& in, const Options&) {
        const Sublattice ns = decode_sublattice(field(in, "ns"));
        return json{{"order", encode(brauer_order(decode_bfield(field(in, "b")), ns))},
                    {"saturation_applied", saturate_ns(ns).changed}};
    };
    h["brauer-equiv"] = [](const json& in, const Options&) {
        const Sublattice ns = decode_sublattice(field(in, "ns"));
        const auto w = brauer_equivalent(decode_bfield(field(in, "b")), decode_bfield(field(in, "b2")), ns);
        return json{{"equivalent", w.has_value()},
                    {"witness", w ? encode(*w) : json(nullptr)},
                    {"saturation_applied", saturate_ns(ns).changed}};
    };
    h["twist-square"] = [](const json& in, const Options&) {
        const Sublattice ns = decode_sublattice(field(in, "ns"));
        const BField b = decode_bfield(field(in, "b"));
        const BField b2 = decode_bfield(field(in, "b2"));
        std::optional<BrauerWitness> w;
        if (in.contains("witness"))
            w = decode_witness(in["witness"]);
        else
            w = brauer_equivalent(b, b2, ns);
        if (!w)
            throw PreconditionError("B-fields define different Brauer classes");
        const TwistComparison t = twist_comparison_isometry(b, b2, *w, ns);
        return json{{"witness", encode(*w)},
                    {"integral", encode_rows(t.integral.matrix())},
                    {"rational", encode_rows(t.rational.matrix())},
                    {"ambient", encode(t.integral.source())}};
    };
    h["mukai-check"] = [](const json& in, const Options&) {
        const Sublattice ns = decode_sublattice(field(in, "ns"));
        const MukaiCheck c =
            is_mukai_vector(decode_mukai(field(in, "v")), bfield_or_zero(in, ns.ambient.rank()), ns);
        return json{{"valid", c.valid}, {"primitive", c.primitive}};
    };
    h["wall-bound"] = [](const json& in, const Options&) {
        const Lattice ns = decode_lattice(field(in, "ns"));
        const MukaiVector v = decode_mukai(field(in, "v"));
        const Int r0 = decode_int(field(in, "r0"));
        return json{{"bound", encode(wall_bound(v, r0, ns))}, {"l", encode(wall_multiplicity(v, r0))}};
    };
    h["general"] = [](const json& in, const Options&) {
        const WallQuery q = point_query(in);
        const Generality g = is_general(q.h0, q);
        return json{{"general", g.general}, {"witnesses", walls_json(g.witnesses)}};
    };
    h["walls-between"] = [](const json& in, const Options&) {
        const WallQuery q = decode_wall_query(in);
        return json{{"bound", encode(wall_bound(q.v, q.r0, q.ns))}, {"walls", walls_json(walls_between(q))}};
    };
    h["same-chamber"] = [](const json& in, const Options&) {
        return json{{"same_chamber", same_chamber(decode_wall_query(in))}};
    };
    h["strong-general"] = [](const json& in, const Options&) {
        const WallQuery q = point_query(in);
        const StrongGenerality s = strong_generality(q.h0, q);
        return json{{"holds", s.holds},
                    {"min_norm", s.min_norm ? encode(*s.min_norm) : json(nullptr)},
                    {"bound", encode(wall_bound(q.v, q.r0, q.ns))}};
    };
    h["moduli"] = [](const json& in, const Options&) {
        const Sublattice ns = decode_sublattice(field(in, "ns"));
        const bool assume = in.contains("assume_general") && in["assume_general"].get<bool>();
        return encode(moduli_report(decode_mukai(field(in, "v")), bfield_or_zero(in, ns.ambient.rank()), ns,
                                    decode_int_vec(field(in, "H")), assume));
    };
    h["beauville"] = [](const json& in, const Options&) {
        return lattice_summary(beauville_lattice(decode_int_vec(field(in, "v")), decode_lattice(field(in, "ambient"))));
    };
    h["algebraic-beauville"] = [](const json& in, const Options&) {
        const MukaiVector v = decode_mukai(field(in, "v"));
        const json& ns = field(in, "ns");
        if (ns.is_object() && ns.contains("basis")) {
            const Sublattice sub = decode_sublattice(ns);
            return lattice_summary(algebraic_beauville(v, bfield_or_zero(in, sub.ambient.rank()), sub));
        }
        return lattice_summary(algebraic_beauville(v, decode_lattice(ns)));
    };
    h["complement"] = [](const json& in, const Options&) {
        const IntMatrix g = decode_int_matrix(field(in, "gram"));
        IntMatrix vecs = decode_int_matrix(field(in, "vectors"));
        if (vecs.rows() == 0)
            vecs = IntMatrix(0, g.rows());
        return json{{"basis", encode_rows(orthogonal_complement(g, vecs))}};
    };
    h["discriminant"] = [](const json& in, const Options&) {
        return json{{"invariants", encode(discriminant_group(decode_int_matrix(field(in, "gram"))))}};
    };
    h["signature"] = [](const json& in, const Options&) {
        return encode(signature(decode_int_matrix(field(in, "gram"))));
    };
    h["theta"] = [](const json& in, const Options&) {
        const ThetaProjection t = theta_projection(decode_int_vec(field(in, "v")), decode_lattice(field(in, "ambient")));
        return json{{"quotient", encode(t.quotient)},
                    {"complement", encode_rows(t.complement)},
                    {"lift", encode_rows(t.lift)},
                    {"projection", encode_rows(t.projection)}};
    };
    h["compose"] = [](const json& in, const Options&) {
        return encode(compose(decode_isometry(field(in, "g")), decode_isometry(field(in, "f"))));
    };
    h["adjoint-check"] = [](const json& in, const Options&) {
        return json{{"adjoint",
                     adjoint_check(decode_isometry(field(in, "psi")), decode_isometry(field(in, "psi_dual")))}};
    };
    h["lattice"] = [](const json& in, const Options&) {
        const std::string kind = field(in, "kind").get<std::string>();
        if (kind == "rank1")
            return lattice_summary(rank_one(decode_int(field(in, "n"))));
        if (kind == "sum") {
            const json& parts = field(in, "parts");
            if (!parts.is_array() || parts.empty())
                throw ValidationError("\"parts\" must be a non-empty array of lattices");
            Lattice acc = decode_lattice(parts.front());
            for (std::size_t i = 1; i < parts.size(); ++i)
                acc = direct_sum(acc, decode_lattice(parts[i]));
            return lattice_summary(acc);
        }
        return lattice_summary(decode_lattice(json(kind)));
    };
    return h;
}

json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(path);
        if (!f)
            throw ValidationError("cannot open input file " + path);
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return json::parse(text);
}

int fail(const char* code, const std::string& message, int status, bool pretty) {
    const json err = {{"error", {{"code", code}, {"message", message}}}};
    std::cout << (pretty ? err.dump(2) : err.dump()) << '\n';
    return status;
}

} // namespace

int main(int argc, char** argv) {
    const auto table = handlers();
    std::vector<std::string> names;
    for (const auto& [name, _] : table)
        names.push_back(name);

    CLI::App app{"Exact lattice computations for twisted sheaves on K3 surfaces"};
    std::string command;
    std::string input = "-";
    bool pretty = false;
    std::string surface = "k3";
    app.add_option("command", command, "Subcommand")->required()->check(CLI::IsMember(names));
    app.add_option("input", input, "Input JSON file, or - for stdin");
    app.add_flag("--pretty", pretty, "Indent the output");
    app.add_option("--surface", surface, "Surface type for sqrt(td)")->check(CLI::IsMember({"k3", "abelian"}));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Options opt;
    opt.surface = surface == "abelian" ? SurfaceType::abelian : SurfaceType::k3;
    try {
        const json out = table.at(command)(read_input(input), opt);
        std::cout << (pretty ? out.dump(2) : out.dump()) << '\n';
        return 0;
    } catch (const ValidationError& e) {
        return fail("validation", e.what(), 2, pretty);
    } catch (const nlohmann::json::exception& e) {
        return fail("validation", e.what(), 2, pretty);
    } catch (const PreconditionError& e) {
        return fail("precondition", e.what(), 3, pretty);
    }
}
