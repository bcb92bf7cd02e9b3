#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpcodes/construct.hpp"
#include "fpcodes/descendant.hpp"
#include "fpcodes/generate.hpp"
#include "fpcodes/io.hpp"
#include "fpcodes/verify_one_level.hpp"
#include "fpcodes/verify_two_level.hpp"

namespace py = pybind11;
using namespace fpcodes;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(json_to_py(item));
        return out;
    }
    default: {
        py::dict out;
        for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
        return out;
    }
    }
}

Property parse_property(const std::string& name) {
    const auto p = property_from_name(name);
    if (!p) throw ParameterError("unknown property '" + name + "'");
    return *p;
}

VerifyOptions make_options(unsigned jobs, std::uint64_t budget) {
    VerifyOptions opts;
    opts.jobs = jobs;
    if (budget != 0) opts.budget = Budget::with_work(budget);
    return opts;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-level fingerprinting codes: construction and exhaustive verification";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

    py::class_<Code>(m, "Code")
        .def(py::init([](std::size_t q, std::size_t length, std::vector<Codeword> words) {
                 return Code(Alphabet(q), length, std::move(words));
             }),
             py::arg("q"), py::arg("length"), py::arg("words"))
        .def_property_readonly("q", [](const Code& c) { return c.alphabet().size(); })
        .def_property_readonly("length", &Code::length)
        .def_property_readonly("words", [](const Code& c) { return c.words(); })
        .def("__len__", &Code::size)
        .def("__contains__", &Code::contains)
        .def("__eq__", [](const Code& a, const Code& b) { return a == b; });

    py::class_<TwoLevelCode>(m, "TwoLevelCode")
        .def(py::init<Code, std::vector<unsigned>>(), py::arg("base"), py::arg("assignments"))
        .def_static(
            "from_groups",
            [](std::size_t q, std::size_t length, const std::vector<std::vector<Codeword>>& groups) {
                return TwoLevelCode::from_groups(Alphabet(q), length, groups);
            },
            py::arg("q"), py::arg("length"), py::arg("groups"))
        .def_property_readonly("base", &TwoLevelCode::base)
        .def_property_readonly("group_count", &TwoLevelCode::group_count)
        .def_property_readonly("group_size", &TwoLevelCode::group_size)
        .def_property_readonly("assignments", &TwoLevelCode::assignments)
        .def("group_members", &TwoLevelCode::group_members, py::arg("group"))
        .def("group_of", py::overload_cast<const Codeword&>(&TwoLevelCode::group_of, py::const_),
             py::arg("word"))
        .def("__eq__", [](const TwoLevelCode& a, const TwoLevelCode& b) { return a == b; });

    m.def("hamming_distance", &hamming_distance, py::arg("x"), py::arg("y"));
    m.def(
        "min_distance",
        [](const Code& c, const Codeword& y) {
            const MinDistance r = min_distance_to_code(c, y);
            return py::make_tuple(r.distance, r.minimizers);
        },
        py::arg("code"), py::arg("word"), "distance to the code and all minimizers");

    m.def("enumerate_descendants", &enumerate_descendants, py::arg("parents"),
          py::arg("ceiling") = kDefaultProductCeiling);
    m.def("is_descendant", &is_descendant, py::arg("parents"), py::arg("word"));
    m.def("profiles_intersect", &profiles_intersect, py::arg("first"), py::arg("second"));

    m.def(
        "check_property",
        [](const std::string& prop, const Code& c, unsigned t, unsigned jobs,
           std::uint64_t budget) {
            const Property p = parse_property(prop);
            const VerifyOptions opts = make_options(jobs, budget);
            Verdict v;
            {
                py::gil_scoped_release release;
                v = check_property(p, c, t, opts);
            }
            return json_to_py(to_json(v, c.alphabet().size()));
        },
        py::arg("prop"), py::arg("code"), py::arg("t"), py::arg("jobs") = 1,
        py::arg("budget") = 0, "one-level exhaustive check; returns {holds, witness?}");

    m.def(
        "check_property_two_level",
        [](const std::string& prop, const TwoLevelCode& c, unsigned T, unsigned t, unsigned jobs,
           std::uint64_t budget) {
            const Property p = parse_property(prop);
            const VerifyOptions opts = make_options(jobs, budget);
            Verdict v;
            {
                py::gil_scoped_release release;
                v = check_property(p, c, T, t, opts);
            }
            return json_to_py(to_json(v, c.base().alphabet().size()));
        },
        py::arg("prop"), py::arg("code"), py::arg("T"), py::arg("t"), py::arg("jobs") = 1,
        py::arg("budget") = 0, "two-level exhaustive check; returns {holds, witness?}");

    m.def(
        "construct_two_level",
        [](const Code& c, unsigned g, const std::string& mode, std::uint64_t seed) {
            ConstructOptions opts;
            if (mode == "random")
                opts.mode = PickMode::seeded;
            else if (mode != "det")
                throw ParameterError("mode must be 'det' or 'random'");
            opts.seed = seed;
            const Construction built = construct_two_level(c, g, opts);
            return py::make_tuple(built.code, built.remap.table(),
                                  json_to_py(to_json(built.report, c.alphabet().size())));
        },
        py::arg("code"), py::arg("groups"), py::arg("mode") = "det", py::arg("seed") = 0,
        "returns (two_level_code, pi_table, report)");

    m.def(
        "check_lemma_containment",
        [](const std::vector<Symbol>& pi, const std::vector<Codeword>& parents) {
            return check_lemma_containment(SymbolRemap(pi), parents);
        },
        py::arg("pi"), py::arg("parents"));

    m.def(
        "gen_polynomial_fp_code",
        [](std::uint32_t q, std::size_t length, unsigned t, std::vector<std::uint32_t> points) {
            return gen_polynomial_fp_code(PrimeField(q), length, t, std::move(points));
        },
        py::arg("q"), py::arg("length"), py::arg("t"),
        py::arg("points") = std::vector<std::uint32_t>{});
    m.def("gen_random_code", &gen_random_code, py::arg("q"), py::arg("length"), py::arg("n"),
          py::arg("seed"));
    m.def("partition_by_first_coordinate", &partition_by_first_coordinate, py::arg("code"));

    m.def("read_code_file", &read_code_file, py::arg("path"));
    m.def("write_code_file", &write_code_file, py::arg("path"), py::arg("code"));
    m.def("read_grouped_code_file", &read_grouped_code_file, py::arg("path"));
    m.def("write_grouped_code_file", &write_grouped_code_file, py::arg("path"), py::arg("code"));
}
