#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropdesc/context.hpp"
#include "tropdesc/errors.hpp"
#include "tropdesc/floor_count.hpp"
#include "tropdesc/descendants.hpp"
#include "tropdesc/invariant_key.hpp"
#include "tropdesc/line_descendants.hpp"
#include "tropdesc/provider.hpp"
#include "tropdesc/validate.hpp"

namespace py = pybind11;
using namespace tropdesc;

namespace {

// Rationals cross the boundary as canonical strings; the Python layer turns them into Fractions.
std::string str(const Rational& r) { return r.to_string(); }

Context make_context(bool use_oracle) {
    ContextOptions o;
    o.use_oracle = use_oracle;
    return Context(o);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact tropical descendant invariants of the plane.";
    m.attr("oracle_built") = kPolygonOracleBuilt;

    static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
    static py::exception<ProfileError> profile_error(m, "ProfileError", PyExc_ValueError);
    static py::exception<CacheError> cache_error(m, "CacheError", error.ptr());
    static py::exception<InsufficientDataError> missing_error(m, "InsufficientDataError", PyExc_LookupError);

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InsufficientDataError& e) {
            py::object cls = missing_error;
            py::object inst = cls(e.what());
            inst.attr("missing") = py::cast(e.missing_keys());
            PyErr_SetObject(missing_error.ptr(), inst.ptr());
        } catch (const ParseError& e) {
            PyErr_SetString(parse_error.ptr(), e.what());
        } catch (const DomainError& e) {
            PyErr_SetString(domain_error.ptr(), e.what());
        } catch (const ProfileError& e) {
            PyErr_SetString(profile_error.ptr(), e.what());
        } catch (const CacheError& e) {
            PyErr_SetString(cache_error.ptr(), e.what());
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    py::class_<Context>(m, "Context")
        .def(py::init(&make_context), py::arg("use_oracle") = kPolygonOracleBuilt)
        .def_property_readonly("use_oracle", [](const Context& c) { return c.options().use_oracle; })
        .def("cache_size", [](const Context& c) { return c.cache().size(); })
        .def("clear_cache", [](Context& c) { c.cache().clear(); })
        .def("load_cache", [](Context& c, const std::string& path) { c.cache().load(path); })
        .def("save_cache", [](const Context& c, const std::string& path) { c.cache().save(path); });

    m.def("canonical_key", [](const std::string& text) { return InvariantKey::parse(text).str(); });

    m.def("compute", [](Context& ctx, const std::string& key) {
        const auto s = compute(ctx, InvariantKey::parse(key));
        return std::pair<std::string, std::string>(str(s.value), std::string(to_string(s.provenance)));
    });
    m.def("lookup", [](Context& ctx, const std::string& key) -> std::optional<std::pair<std::string, std::string>> {
        const auto s = provider_lookup(ctx, InvariantKey::parse(key));
        if (!s) return std::nullopt;
        return std::pair<std::string, std::string>(str(s->value), std::string(to_string(s->provenance)));
    });

    m.def("kontsevich_n", [](int d) { return str(floors::kontsevich_N(d)); });
    m.def("n", [](Context& ctx, int d) { return str(floors::N(ctx, d)); });
    m.def("relative", [](Context& ctx, int d, std::vector<int> fixed, std::vector<int> free) {
        return str(floors::relative_invariant(ctx, d, TangencyProfile{std::move(fixed), std::move(free)}));
    });
    m.def("psi_point", [](Context& ctx, int d, int k) { return str(points::psiP(ctx, d, k)); });
    m.def("psi_line", [](Context& ctx, int d, int k) { return str(lines::psi_line(ctx, d, k)); });
    m.def("psi_line_line", [](Context& ctx, int d) { return str(lines::psi_line_line(ctx, d)); });
    m.def("line_psi_line", [](Context& ctx, int d, int k) { return str(lines::line_psi_line(ctx, d, k)); });

    m.def("validate", [](Context& ctx, const std::string& suite) {
        const auto report = validate::run(ctx, validate::parse_suite(suite));
        py::list out;
        for (const auto& c : report.checks)
            out.append(py::dict(py::arg("name") = c.name, py::arg("status") = std::string(validate::to_string(c.status)),
                                py::arg("expected") = c.expected, py::arg("actual") = c.actual,
                                py::arg("detail") = c.detail));
        return out;
    });
}
