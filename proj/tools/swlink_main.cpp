// Command-line surface: every pipeline end-to-end with stable JSON output.
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 domain/precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "swlink/jsonio.hpp"

namespace {

using namespace swlink;

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

ManifoldBlock load_block(const std::string& path) {
    return block_from_json(parse_json(slurp(path), "block file '" + path + "'"));
}

SurgeryBasisTriple load_triple(const std::string& path) {
    return triple_from_json(parse_json(slurp(path), "triple file '" + path + "'"));
}

void emit(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

/// Closure polynomial with the component variables as its full alphabet,
/// unused ones included (a split link keeps its arity).
LaurentPoly closure_delta_full(const BraidWord& b) {
    ClosureComponents cc = closure_components(b);
    std::vector<std::string> vars;
    for (int c = 0; c < cc.count; ++c) vars.push_back(component_variable(c, cc.count));
    std::sort(vars.begin(), vars.end());
    LaurentPoly rep = closure_alexander(b).rep();
    return rep.aligned_to(merged_vars(rep.vars(), vars));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact braid, Alexander/Hosokawa, and torus-surgery calculator"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string braid_text, braid2_text, block_path, class_name, triple_path;
    std::string t1_path, t2_path;
    std::vector<std::string> block_paths;
    long long pp = 0, qq = 0, rr = 0;
    int genus = 0, self_int = 0;
    std::vector<int> pairings;
    bool axis = false;

    auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a closed braid");
    alex->add_option("braid", braid_text, "braid word, e.g. \"2: 1 1 1\"")->required();
    alex->add_flag("--axis", axis, "use the closed braid together with its axis");

    auto* hos = app.add_subcommand("hosokawa", "Hosokawa polynomial of a closed braid");
    hos->add_option("braid", braid_text)->required();

    auto* ks = app.add_subcommand("knot-surgery", "multiply a block by a knot polynomial");
    ks->add_option("--block", block_path)->required();
    ks->add_option("--braid", braid_text)->required();
    ks->add_option("--class", class_name)->required();

    auto* ls = app.add_subcommand("link-surgery", "link-surgery product over several blocks");
    ls->add_option("--blocks", block_paths)->required()->expected(-1);
    ls->add_option("--link-braid", braid_text)->required();

    auto* fs = app.add_subcommand("fibersum", "relative invariant of a braided torus");
    fs->add_option("--block", block_path)->required();
    fs->add_option("--braid", braid_text)->required();

    auto* mm = app.add_subcommand("mms", "evaluate a surgery family at (p,q,r)");
    mm->add_option("--triple", triple_path)->required();
    mm->add_option("-p", pp)->required();
    mm->add_option("-q", qq)->required();
    mm->add_option("-r", rr)->required();

    auto* fe = app.add_subcommand("family-equal", "compare two surgery families");
    fe->add_option("--t1", t1_path)->required();
    fe->add_option("--t2", t2_path)->required();

    auto* di = app.add_subcommand("distinguish", "braided-torus isotopy obstruction");
    di->add_option("braid1", braid_text)->required();
    di->add_option("braid2", braid2_text)->required();

    auto* ad = app.add_subcommand("adjunction", "check the adjunction inequality");
    ad->add_option("-g", genus, "genus")->required();
    ad->add_option("-s", self_int, "self-intersection")->required();
    ad->add_option("--pairings", pairings)->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (*alex) {
            BraidWord b = parse_braid(braid_text);
            AssociateClass d = axis ? axis_alexander(b) : closure_alexander(b);
            emit(poly_to_json(d.rep()), pretty);
        } else if (*hos) {
            BraidWord b = parse_braid(braid_text);
            emit(poly_to_json(hosokawa_of_braid(b).rep()), pretty);
        } else if (*ks) {
            ManifoldBlock x = load_block(block_path);
            BraidWord b = parse_braid(braid_text);
            if (closure_components(b).count != 1)
                throw DomainError("knot surgery needs a one-component closure");
            emit(block_to_json(knot_surgery(x, closure_alexander(b), class_name)), pretty);
        } else if (*ls) {
            BraidWord b = parse_braid(braid_text);
            std::vector<std::pair<ManifoldBlock, std::string>> blocks;
            for (const std::string& path : block_paths) {
                ManifoldBlock m = load_block(path);
                if (m.classes.empty())
                    throw DomainError("block '" + m.name + "' declares no classes");
                std::string torus = m.classes.front();
                blocks.emplace_back(std::move(m), torus);
            }
            emit(block_to_json(link_surgery(blocks, closure_delta_full(b))), pretty);
        } else if (*fs) {
            ManifoldBlock x = load_block(block_path);
            if (x.classes.empty()) throw DomainError("block declares no classes");
            BraidWord b = parse_braid(braid_text);
            emit(poly_to_json(fibersum_relative(x, b, x.classes.front()).sw), pretty);
        } else if (*mm) {
            SurgeryBasisTriple tr = load_triple(triple_path);
            emit(poly_to_json(mms_evaluate(tr, Int(pp), Int(qq), Int(rr))), pretty);
        } else if (*fe) {
            FamilyVerdict v = family_equal(load_triple(t1_path), load_triple(t2_path));
            emit(family_verdict_to_json(v), pretty);
        } else if (*di) {
            BraidWord b1 = parse_braid(braid_text);
            BraidWord b2 = parse_braid(braid2_text);
            emit(obstruction_verdict_to_json(braided_torus_obstruction(b1, b2)), pretty);
        } else if (*ad) {
            emit(Json(adjunction_check(genus, self_int, pairings)), pretty);
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 0;
}
