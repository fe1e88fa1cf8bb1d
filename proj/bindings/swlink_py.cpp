// Python bindings for the core operations. Polynomials cross the boundary
// as a small wrapped class; blocks, triples, and verdicts as JSON-shaped
// dicts, matching the CLI payloads.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swlink/jsonio.hpp"
#include "swlink/obstruct.hpp"

namespace py = pybind11;
using namespace swlink;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const Json& item : j) out.append(json_to_py(item));
        return out;
    }
    default: {
        py::dict out;
        for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
        return out;
    }
    }
}

Json py_to_json(const py::handle& obj) {
    return Json::parse(py::str(py::module_::import("json").attr("dumps")(obj)).cast<std::string>());
}

ManifoldBlock block_from_py(const py::handle& obj) { return block_from_json(py_to_json(obj)); }

LaurentPoly collapse_to(const LaurentPoly& p, const std::string& target) {
    std::map<std::string, MonomialMap> sigma;
    for (const std::string& v : p.vars()) sigma[v] = MonomialMap{{target, 1}};
    return specialize(p, sigma);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact braid invariants and torus-surgery calculus";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<BraidWord>(m, "BraidWord")
        .def(py::init([](const std::string& text) { return parse_braid(text); }), py::arg("text"))
        .def_readonly("strands", &BraidWord::strands)
        .def_readonly("letters", &BraidWord::letters)
        .def("__str__", &braid_to_string)
        .def("__repr__",
             [](const BraidWord& b) { return "BraidWord(\"" + braid_to_string(b) + "\")"; })
        .def("permutation",
             [](const BraidWord& b) { return braid_permutation(b).images; })
        .def("closure_components",
             [](const BraidWord& b) {
                 ClosureComponents cc = closure_components(b);
                 return py::make_tuple(cc.count, cc.label);
             })
        .def("conjugate", [](const BraidWord& b, int g) { return conjugate(b, g); }, py::arg("g"))
        .def("stabilize", [](const BraidWord& b, int sign) { return stabilize(b, sign); },
             py::arg("sign") = 1);

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init([](py::handle obj) { return poly_from_json(py_to_json(obj)); }),
             py::arg("json_dict"), "Build from the {'vars':…,'terms':…} encoding")
        .def_static("constant", [](long long c) { return LaurentPoly(Int(c)); })
        .def_static("variable", &LaurentPoly::variable, py::arg("name"), py::arg("exp") = 1)
        .def_property_readonly("vars", [](const LaurentPoly& p) { return p.vars(); })
        .def("to_dict", [](const LaurentPoly& p) { return json_to_py(poly_to_json(p)); })
        .def("is_zero", &LaurentPoly::is_zero)
        .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
        .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
        .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
        .def("__neg__", [](const LaurentPoly& p) { return -p; })
        .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
        .def("__str__", &LaurentPoly::str)
        .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly(" + p.str() + ")"; });

    m.def("normalize_units", &normalize_units, py::arg("poly"));
    m.def("symmetrize", &symmetrize, py::arg("poly"));
    m.def(
        "specialize",
        [](const LaurentPoly& p, const std::map<std::string, MonomialMap>& sigma) {
            return specialize(p, sigma);
        },
        py::arg("poly"), py::arg("sigma"),
        "Ring map sending each variable to a monomial, e.g. {'t': {'t': 2}}");
    m.def(
        "associate_equal",
        [](const LaurentPoly& a, const LaurentPoly& b) {
            return AssociateClass(a) == AssociateClass(b);
        },
        py::arg("a"), py::arg("b"), "Equality up to +-(monomial)");

    m.def(
        "alexander",
        [](const std::string& braid, bool axis) {
            BraidWord b = parse_braid(braid);
            return (axis ? axis_alexander(b) : closure_alexander(b)).rep();
        },
        py::arg("braid"), py::arg("axis") = false,
        "Normalized Alexander polynomial of the closure (or of closure + axis)");
    m.def(
        "hosokawa",
        [](const std::string& braid) { return hosokawa_of_braid(parse_braid(braid)).rep(); },
        py::arg("braid"));

    m.def(
        "knot_surgery",
        [](py::handle block, const std::string& braid, const std::string& torus_class) {
            BraidWord b = parse_braid(braid);
            if (closure_components(b).count != 1)
                throw DomainError("knot surgery needs a one-component closure");
            ManifoldBlock out = knot_surgery(block_from_py(block), closure_alexander(b),
                                             torus_class);
            return json_to_py(block_to_json(out));
        },
        py::arg("block"), py::arg("braid"), py::arg("torus_class"));
    m.def(
        "link_surgery",
        [](py::sequence blocks, const std::string& braid) {
            BraidWord b = parse_braid(braid);
            ClosureComponents cc = closure_components(b);
            std::vector<std::string> vars;
            for (int c = 0; c < cc.count; ++c) vars.push_back(component_variable(c, cc.count));
            std::sort(vars.begin(), vars.end());
            LaurentPoly rep = closure_alexander(b).rep();
            LaurentPoly delta = rep.aligned_to(merged_vars(rep.vars(), vars));
            std::vector<std::pair<ManifoldBlock, std::string>> pairs;
            for (py::handle h : blocks) {
                ManifoldBlock mb = block_from_py(h);
                if (mb.classes.empty()) throw DomainError("block declares no classes");
                std::string torus = mb.classes.front();
                pairs.emplace_back(std::move(mb), torus);
            }
            return json_to_py(block_to_json(link_surgery(pairs, delta)));
        },
        py::arg("blocks"), py::arg("braid"),
        "Blocks are matched to closure components in order; each block's first "
        "class is its torus");
    m.def(
        "fibersum_relative",
        [](py::handle block, const std::string& braid) {
            ManifoldBlock x = block_from_py(block);
            if (x.classes.empty()) throw DomainError("block declares no classes");
            ManifoldBlock out = fibersum_relative(x, parse_braid(braid), x.classes.front());
            return json_to_py(block_to_json(out));
        },
        py::arg("block"), py::arg("braid"));
    m.def(
        "cover_pushforward",
        [](const LaurentPoly& delta, py::handle block) {
            ManifoldBlock x = block_from_py(block);
            if (x.classes.empty()) throw DomainError("block declares no classes");
            return cover_pushforward(AssociateClass(delta), x, x.classes.front());
        },
        py::arg("delta"), py::arg("block"));
    m.def(
        "basic_classes",
        [](py::handle block) {
            py::list out;
            for (const auto& [e, c] : basic_classes(block_from_py(block)))
                out.append(py::make_tuple(e, py::int_(py::str(c.str()))));
            return out;
        },
        py::arg("block"));
    m.def(
        "check_symmetry", [](py::handle block) { return check_symmetry(block_from_py(block)); },
        py::arg("block"));
    m.def(
        "vanishing_flag",
        [](py::handle block, bool split) {
            return json_to_py(block_to_json(vanishing_flag(block_from_py(block), split)));
        },
        py::arg("block"), py::arg("split"),
        "Zero the SW element when a positive-scalar-curvature splitting is declared");
    m.def("adjunction_check", &adjunction_check, py::arg("genus"), py::arg("self_intersection"),
          py::arg("pairings"));

    m.def(
        "mms_evaluate",
        [](py::handle triple, long long p, long long q, long long r) {
            return mms_evaluate(triple_from_json(py_to_json(triple)), Int(p), Int(q), Int(r));
        },
        py::arg("triple"), py::arg("p"), py::arg("q"), py::arg("r"));
    m.def(
        "family_membership",
        [](py::handle triple, const LaurentPoly& target) -> py::object {
            auto sol = family_membership(triple_from_json(py_to_json(triple)), target);
            if (!sol) return py::none();
            py::tuple out(3);
            for (int i = 0; i < 3; ++i) out[i] = py::int_(py::str((*sol)[i].str()));
            return out;
        },
        py::arg("triple"), py::arg("target"));
    m.def(
        "family_equal",
        [](py::handle t1, py::handle t2) {
            FamilyVerdict v =
                family_equal(triple_from_json(py_to_json(t1)), triple_from_json(py_to_json(t2)));
            return json_to_py(family_verdict_to_json(v));
        },
        py::arg("t1"), py::arg("t2"));

    m.def(
        "distinguish",
        [](const std::string& b1, const std::string& b2) {
            ObstructionVerdict v =
                braided_torus_obstruction(parse_braid(b1), parse_braid(b2));
            return json_to_py(obstruction_verdict_to_json(v));
        },
        py::arg("braid1"), py::arg("braid2"));
    m.def(
        "simple_cover_obstruction",
        [](const LaurentPoly& dl, const LaurentPoly& dlp, int k, int kp) {
            ObstructionVerdict v =
                simple_cover_obstruction(AssociateClass(dl), AssociateClass(dlp), k, kp);
            return json_to_py(obstruction_verdict_to_json(v));
        },
        py::arg("delta_l"), py::arg("delta_lp"), py::arg("k"), py::arg("kp"));
    m.def("strands_from_genus", &strands_from_genus, py::arg("genus"));
    m.def("collapse_to", &collapse_to, py::arg("poly"), py::arg("target"),
          "Send every variable to the named one");

#ifdef SWLINK_VERSION
#define SWLINK_STR2(x) #x
#define SWLINK_STR(x) SWLINK_STR2(x)
    m.attr("__version__") = SWLINK_STR(SWLINK_VERSION);
#else
    m.attr("__version__") = "0.1.0";
#endif
}
