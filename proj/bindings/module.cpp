// Python bindings for the lrc core. Coordinates are 0-based here, like
// the C++ API; the JSON formats stay 1-based.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrc/field.hpp"
#include "lrc/json_io.hpp"

namespace py = pybind11;
using namespace lrc;

namespace {

Strategy make_strategy(const std::vector<std::pair<int, CoordSet>>& forced) {
    return Strategy{forced};
}

}  // namespace

PYBIND11_MODULE(lrckit, m) {
    m.doc() = "locally recoverable codes: constructions, exact locality and "
              "distance analysis, sub-code extraction, structure verification";

    auto base = py::register_exception<Error>(m, "LrcError", PyExc_RuntimeError);
    py::register_exception<ShapeError>(m, "ShapeError", base);
    py::register_exception<NotPrime>(m, "NotPrime", base);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", base);
    py::register_exception<AlphabetTooSmall>(m, "AlphabetTooSmall", base);
    py::register_exception<DegenerateCode>(m, "DegenerateCode", base);
    py::register_exception<NonIntegralDimension>(m, "NonIntegralDimension", base);
    py::register_exception<NotSystematic>(m, "NotSystematic", base);
    py::register_exception<TooLarge>(m, "TooLarge", base);
    py::register_exception<InvalidSpec>(m, "InvalidSpec", base);
    py::register_exception<InvalidStrategy>(m, "InvalidStrategy", base);
    py::register_exception<InternalInvariantViolation>(
        m, "InternalInvariantViolation", base);
    py::register_exception<NeedsGlobalRepair>(m, "NeedsGlobalRepair", base);

    py::class_<Limits>(m, "Limits")
        .def(py::init<>())
        .def_readwrite("max_words", &Limits::max_words)
        .def_readwrite("max_symbols", &Limits::max_symbols);

    py::class_<SearchBudget>(m, "SearchBudget")
        .def(py::init<>())
        .def(py::init([](std::size_t max_subsets) {
                 return SearchBudget{max_subsets};
             }),
             py::arg("max_subsets"))
        .def_readwrite("max_subsets", &SearchBudget::max_subsets);

    py::class_<PrimeField>(m, "PrimeField")
        .def(py::init<std::int64_t>(), py::arg("p"))
        .def_property_readonly("p", &PrimeField::p)
        .def("add", &PrimeField::add)
        .def("sub", &PrimeField::sub)
        .def("mul", &PrimeField::mul)
        .def("neg", &PrimeField::neg)
        .def("pow", &PrimeField::pow)
        .def("inv", &PrimeField::inv)
        .def("div", &PrimeField::div);

    m.def("is_prime", &is_prime, py::arg("p"));
    m.def("systematic_mds_generator", &systematic_mds_generator, py::arg("p"),
          py::arg("k"), py::arg("m"),
          "Parity coefficients of a systematic [k+m, k, m+1] MDS code.");

    py::class_<Codebook>(m, "Codebook")
        .def(py::init<int, std::vector<Word>, const Limits&>(), py::arg("q"),
             py::arg("words"), py::arg("limits") = Limits{})
        .def_property_readonly("q", &Codebook::q)
        .def_property_readonly("n", &Codebook::n)
        .def("__len__", &Codebook::size)
        .def_property_readonly("words", &Codebook::words)
        .def("contains", &Codebook::contains, py::arg("word"))
        .def("integral_dimension", &Codebook::integral_dimension)
        .def("to_json", [](const Codebook& c) { return codebook_to_json(c).dump(); });

    py::class_<SystematicCode>(m, "SystematicCode")
        .def(py::init<Codebook, int>(), py::arg("base"), py::arg("k"))
        .def_property_readonly("base", &SystematicCode::base)
        .def_property_readonly("q", &SystematicCode::q)
        .def_property_readonly("n", &SystematicCode::n)
        .def_property_readonly("k", &SystematicCode::k)
        .def("encode", &SystematicCode::encode, py::arg("message"))
        .def("to_json",
             [](const SystematicCode& c) { return systematic_to_json(c).dump(); });

    m.def("codebook_from_json", [](const std::string& text) {
        return codebook_from_json(json::parse(text));
    });
    m.def("systematic_from_json", [](const std::string& text) {
        return systematic_from_json(json::parse(text));
    });

    m.def("hamming_distance", &hamming_distance, py::arg("x"), py::arg("y"));
    m.def("min_distance", &min_distance, py::arg("codebook"));

    py::class_<SingletonReport>(m, "SingletonReport")
        .def_readonly("lhs", &SingletonReport::lhs)
        .def_readonly("rhs", &SingletonReport::rhs)
        .def_readonly("holds", &SingletonReport::holds)
        .def_readonly("slack", &SingletonReport::slack)
        .def_readonly("exact_dimension", &SingletonReport::exact_dimension);
    m.def("check_singleton", &check_singleton, py::arg("codebook"));

    py::class_<ProjectionReport>(m, "ProjectionReport")
        .def_readonly("bijective", &ProjectionReport::bijective)
        .def_readonly("counterexample", &ProjectionReport::counterexample);
    m.def("mds_projection_check", &mds_projection_check, py::arg("codebook"),
          py::arg("coords"));

    m.def("is_mds", &is_mds, py::arg("codebook"));
    m.def("systematic_from_codebook", &systematic_from_codebook,
          py::arg("codebook"), py::arg("k"));
    m.def("punctured", &punctured, py::arg("codebook"), py::arg("keep"));

    m.def("determines", &determines, py::arg("codebook"), py::arg("coords"),
          py::arg("target"),
          "True iff the words agreeing on coords always agree at target.");
    m.def("min_repair_set", &min_repair_set, py::arg("codebook"), py::arg("target"),
          py::arg("size_cap"), py::arg("budget") = SearchBudget{});
    m.def("determining_sets", &determining_sets, py::arg("codebook"),
          py::arg("target"), py::arg("size_cap"), py::arg("budget") = SearchBudget{});

    py::class_<LocalityEntry>(m, "LocalityEntry")
        .def_readonly("coordinate", &LocalityEntry::coordinate)
        .def_readonly("locality", &LocalityEntry::locality)
        .def_readonly("witness", &LocalityEntry::witness);
    m.def("locality_profile", &locality_profile, py::arg("codebook"),
          py::arg("size_cap"), py::arg("budget") = SearchBudget{});
    m.def("information_locality", &information_locality, py::arg("code"),
          py::arg("size_cap"), py::arg("budget") = SearchBudget{});
    m.def("reversibility_check", &reversibility_check, py::arg("codebook"),
          py::arg("group"));

    py::class_<SubcodeStep>(m, "SubcodeStep")
        .def_readonly("i", &SubcodeStep::i)
        .def_readonly("S", &SubcodeStep::S)
        .def_readonly("T", &SubcodeStep::T)
        .def_readonly("sigma", &SubcodeStep::sigma)
        .def_readonly("size_after", &SubcodeStep::size_after)
        .def_property_readonly("t", &SubcodeStep::t);

    py::class_<SubcodeTrace>(m, "SubcodeTrace")
        .def_readonly("steps", &SubcodeTrace::steps)
        .def_readonly("ell", &SubcodeTrace::ell)
        .def_readonly("R_final", &SubcodeTrace::R_final)
        .def_readonly("retained", &SubcodeTrace::retained)
        .def("to_json", [](const SubcodeTrace& t) { return trace_to_json(t).dump(); });

    py::class_<Strategy>(m, "Strategy")
        .def(py::init(&make_strategy), py::arg("forced_steps"))
        .def_static("automatic", &Strategy::automatic)
        .def_readonly("forced_steps", &Strategy::forced_steps);

    m.def("run_subcode", &run_subcode, py::arg("code"), py::arg("r"),
          py::arg("strategy") = Strategy{}, py::arg("budget") = SearchBudget{},
          py::arg("retain_subcodes") = false);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("n", &BoundReport::n)
        .def_readonly("k", &BoundReport::k)
        .def_readonly("d", &BoundReport::d)
        .def_readonly("r", &BoundReport::r)
        .def_readonly("rhs", &BoundReport::rhs)
        .def_readonly("holds", &BoundReport::holds)
        .def_readonly("optimal", &BoundReport::optimal);
    m.def("check_locality_bound", &check_locality_bound, py::arg("n"), py::arg("k"),
          py::arg("d"), py::arg("r"));

    py::class_<TightnessReport>(m, "TightnessReport")
        .def_readonly("steps_full_width", &TightnessReport::steps_full_width)
        .def_readonly("ell_matches", &TightnessReport::ell_matches)
        .def_readonly("sizes_match", &TightnessReport::sizes_match)
        .def_readonly("groups_disjoint", &TightnessReport::groups_disjoint)
        .def_readonly("expected_ell", &TightnessReport::expected_ell)
        .def_readonly("detail", &TightnessReport::detail)
        .def_property_readonly("ok", &TightnessReport::pass);
    m.def("verify_trace_tightness", &verify_trace_tightness, py::arg("trace"),
          py::arg("k"), py::arg("r"), py::arg("q"));
    m.def("independence_check", &independence_check, py::arg("code"),
          py::arg("sets"));

    m.def(
        "build_rs_mds",
        [](int q, int k, int d, const Limits& limits) {
            return build_rs_mds(q, k, d, limits);
        },
        py::arg("q"), py::arg("k"), py::arg("d"), py::arg("limits") = Limits{});
    m.def(
        "build_pyramid",
        [](int q, int k, int r, int d, const Limits& limits) {
            return build_pyramid({q, k, r, d}, limits);
        },
        py::arg("q"), py::arg("k"), py::arg("r"), py::arg("d"),
        py::arg("limits") = Limits{});
    m.def("build_nonreversible_example", &build_nonreversible_example);
    m.def("twist_permutations", &twist_permutations, py::arg("seed"), py::arg("q"),
          py::arg("n"));
    m.def(
        "twist",
        [](const Codebook& c, std::uint64_t seed) {
            return twist(c, TwistSpec::seeded(seed));
        },
        py::arg("codebook"), py::arg("seed"));
    m.def(
        "twist_systematic",
        [](const SystematicCode& c, std::uint64_t seed) {
            return twist(c, TwistSpec::seeded(seed));
        },
        py::arg("code"), py::arg("seed"));
    m.def(
        "twist_explicit",
        [](const Codebook& c, const std::vector<std::vector<Symbol>>& perms) {
            return twist(c, TwistSpec::explicit_perms(perms));
        },
        py::arg("codebook"), py::arg("perms"));

    py::class_<ItemVerdict>(m, "ItemVerdict")
        .def_readonly("ok", &ItemVerdict::pass)
        .def_readonly("detail", &ItemVerdict::detail);

    py::class_<StructureReport>(m, "StructureReport")
        .def_readonly("applicable", &StructureReport::applicable)
        .def_readonly("reason", &StructureReport::reason)
        .def_readonly("optimal", &StructureReport::optimal)
        .def_readonly("groups", &StructureReport::groups)
        .def_readonly("info_coords", &StructureReport::info_coords)
        .def_readonly("light_parities", &StructureReport::light_parities)
        .def_readonly("heavy_parities", &StructureReport::heavy_parities)
        .def_readonly("items", &StructureReport::items)
        .def_readonly("heavy_bound", &StructureReport::heavy_bound)
        .def("all_pass", &StructureReport::all_pass)
        .def("to_json", [](const StructureReport& r) {
            return structure_report_to_json(r).dump();
        });
    m.def("verify_theorem4", &verify_theorem4, py::arg("code"), py::arg("r"),
          py::arg("budget") = SearchBudget{});
    m.def("verify_theorem5", &verify_theorem5, py::arg("code"), py::arg("r"),
          py::arg("budget") = SearchBudget{});
    m.def("verify_structure", &verify_structure, py::arg("code"), py::arg("r"),
          py::arg("budget") = SearchBudget{});
    m.def("heavy_dependency_check", &heavy_dependency_check, py::arg("code"),
          py::arg("h"), py::arg("info_groups"));

    py::class_<ErasurePattern>(m, "ErasurePattern")
        .def(py::init([](const std::vector<std::optional<Symbol>>& word) {
                 return ErasurePattern{word};
             }),
             py::arg("word"))
        .def_readonly("word", &ErasurePattern::word)
        .def_property_readonly("erased", &ErasurePattern::erased);

    py::enum_<RecoveryResult::Status>(m, "RecoveryStatus")
        .value("Unique", RecoveryResult::Status::Unique)
        .value("Ambiguous", RecoveryResult::Status::Ambiguous)
        .value("Inconsistent", RecoveryResult::Status::Inconsistent);

    py::class_<RecoveryResult>(m, "RecoveryResult")
        .def_readonly("status", &RecoveryResult::status)
        .def_readonly("word", &RecoveryResult::word)
        .def_readonly("match_count", &RecoveryResult::match_count);
    m.def("recover_erasures", &recover_erasures, py::arg("codebook"),
          py::arg("pattern"));

    py::class_<LocalRepair>(m, "LocalRepair")
        .def_readonly("value", &LocalRepair::value)
        .def_readonly("accessed", &LocalRepair::accessed);
    m.def("local_repair", &local_repair, py::arg("codebook"), py::arg("pattern"),
          py::arg("profile"));

    m.attr("__version__") = "0.1.0";
}
