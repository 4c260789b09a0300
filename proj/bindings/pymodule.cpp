#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gtklr/canonical.hpp"
#include "gtklr/characters.hpp"
#include "gtklr/gtmod.hpp"
#include "gtklr/oracle.hpp"
#include "gtklr/serialize.hpp"
#include "gtklr/words.hpp"

namespace py = pybind11;
using namespace gtklr;

namespace {

DimensionVector dim(const std::vector<int>& v) { return DimensionVector(v); }

std::string render(const Word& w, int n) { return word_to_string(w, n); }

Word intern(const std::string& s) { return parse_word(s).word; }

py::object py_int(const std::string& digits) {
    return py::module_::import("builtins").attr("int")(digits);
}

py::dict poly_dict(const Laurent& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[py::int_(e)] = py_int(c.str());
    return d;
}

py::dict char_dict(const Character& ch, int n) {
    py::dict d;
    for (const auto& [w, p] : ch) d[py::str(render(w, n))] = poly_dict(p);
    return d;
}

py::object big_to_py(const BigInt& x) { return py_int(x.str()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact characters of KLRW simple modules and Gelfand-Tsetlin block tables";

    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<structural_error>(m, "StructuralError", PyExc_AssertionError);

    m.def("gl_dim", [](int n) { return DimensionVector::gl(n).v; },
          "dimension vector (1, ..., n)", py::arg("n"));

    m.def("count_red_good",
          [](const std::vector<int>& v) { return big_to_py(count_red_good(dim(v))); },
          py::arg("v"));

    m.def("enumerate_red_good", [](const std::vector<int>& v) {
        DimensionVector dv = dim(v);
        std::vector<std::string> out;
        for (const auto& w : enumerate_red_good(dv)) out.push_back(render(w, dv.n()));
        return out;
    });

    m.def("enumerate_words", [](const std::vector<int>& v) {
        DimensionVector dv = dim(v);
        std::vector<std::string> out;
        for (const auto& w : enumerate_words(dv)) out.push_back(render(w, dv.n()));
        return out;
    });

    m.def("is_red_good", [](const std::string& w, int n) { return is_red_good(intern(w), n); },
          py::arg("word"), py::arg("n"));

    m.def("factorize_red_good", [](const std::string& w, int n) -> py::object {
        auto f = factorize_red_good(intern(w), n);
        if (!f) return py::none();
        py::dict d;
        py::list a, b;
        for (const auto& x : f->a_list) a.append(render(x, n));
        for (const auto& x : f->b_list) b.append(render(x, n));
        d["a"] = a;
        d["b"] = b;
        py::dict mult;
        for (const auto& [word, m_] : f->multiplicities) mult[py::str(render(word, n))] = m_;
        d["multiplicities"] = mult;
        return d;
    });

    m.def("gk_dimension", [](const std::string& w, int n) { return gk_dimension(intern(w), n); });
    m.def("is_essential", [](const std::string& w, int n) { return is_essential(intern(w), n); });
    m.def("essentially_same", [](const std::string& a, const std::string& b, int n) {
        return essentially_same(intern(a), intern(b), n);
    });
    m.def("iws_predicate", [](const std::string& w, int n) { return iws_predicate(intern(w), n); });
    m.def("run_divisor", [](const std::string& w, int n) { return run_divisor(intern(w), n); });
    m.def("is_realizable_singular", [](const std::string& w, int n, const std::vector<int>& comp) {
        return is_realizable_singular(intern(w), n, comp);
    });

    m.def("quantum_factorial", [](int mth) { return poly_dict(quantum_factorial(mth)); });

    m.def("canonical_form",
          [](const std::string& w, int n) { return render(canonical_form(intern(w), n), n); });
    m.def("canonical_class", [](const std::string& w, int n) {
        std::vector<std::string> out;
        for (const auto& x : canonical_class(intern(w), n)) out.push_back(render(x, n));
        return out;
    });

    m.def("std_character", [](const std::string& good, const std::vector<int>& v) {
        DimensionVector dv = dim(v);
        return char_dict(std_character(intern(good), dv), dv.n());
    });

    m.def(
        "simple_characters",
        [](const std::vector<int>& v, int strand_limit) {
            DimensionVector dv = dim(v);
            BlockOptions opts;
            opts.strand_limit = strand_limit;
            BlockData block = simple_characters(dv, opts);
            py::dict out;
            py::list simples;
            for (const auto& s : block.simples) {
                py::dict rec;
                rec["good"] = render(s.good_word, dv.n());
                rec["kappa"] = poly_dict(s.kappa);
                rec["shift"] = s.shift;
                rec["char"] = char_dict(s.character, dv.n());
                simples.append(rec);
            }
            out["v"] = v;
            out["simples"] = simples;
            py::list decomp;
            for (const auto& [key, gamma] : block.decomposition) {
                py::dict rec;
                rec["std"] = render(key.first, dv.n());
                rec["simple"] = render(key.second, dv.n());
                rec["gamma"] = poly_dict(gamma);
                decomp.append(rec);
            }
            out["decomposition"] = decomp;
            return out;
        },
        py::arg("v"), py::arg("strand_limit") = 12);

    m.def(
        "block_table",
        [](const std::vector<int>& v, py::object singular, bool graded, int threads) {
            BlockSpec spec;
            spec.v = dim(v);
            if (!singular.is_none()) spec.singular = singular.cast<std::vector<int>>();
            TableOptions opts;
            opts.graded = graded;
            opts.threads = threads;
            BlockTable t = block_table(spec, opts);
            py::dict out;
            py::list rows, cols;
            for (const auto& w : t.row_words) rows.append(render(w, spec.v.n()));
            for (const auto& w : t.columns) cols.append(render(w, spec.v.n()));
            out["rows"] = rows;
            out["columns"] = cols;
            out["column_slots"] = t.column_slots;
            out["entries"] = t.entries;
            out["boxes"] = t.boxes;
            out["gk"] = t.gk;
            if (t.iws) out["iws"] = *t.iws;
            if (graded) {
                py::list g;
                for (const auto& row : t.graded) {
                    py::list r;
                    for (const auto& p : row) r.append(poly_dict(p));
                    g.append(r);
                }
                out["graded"] = g;
            }
            return out;
        },
        py::arg("v"), py::arg("singular") = py::none(), py::arg("graded") = false,
        py::arg("threads") = 1);

    m.def("weight_to_word", [](const std::string& pattern) -> py::object {
        GTPattern p = parse_pattern(pattern);
        WeightClass wc = weight_to_word(p);
        if (wc.critical) return py::none();
        return py::str(render(wc.word, p.n()));
    });

    m.def("verma_word", [](const std::vector<int>& sigma) {
        int n = static_cast<int>(sigma.size());
        return render(verma_word(sigma, n), n);
    });

    m.def("semi_pattern_support",
          [](const std::vector<int>& sigma, const std::vector<long long>& chi, int bound) {
              int n = static_cast<int>(sigma.size());
              std::vector<std::string> out;
              for (const auto& w : semi_pattern_support(sigma, chi, bound))
                  out.push_back(render(w, n));
              return out;
          });

    m.def("product_multiplicity",
          [](const std::vector<std::vector<int>>& cosets, const std::vector<std::string>& words,
             const std::vector<std::string>& goods) {
              std::vector<DimensionVector> cs;
              for (const auto& v : cosets) cs.push_back(dim(v));
              std::vector<Word> ws, gs;
              for (const auto& s : words) ws.push_back(intern(s));
              for (const auto& s : goods) gs.push_back(intern(s));
              return big_to_py(product_multiplicity(cs, ws, gs));
          });

    m.def(
        "verify_gl_relations",
        [](int n, int trials, unsigned long long seed) {
            RelationReport r = verify_gl_relations(n, trials, seed);
            std::vector<std::pair<std::string, bool>> out;
            for (const auto& rel : r.relations) out.emplace_back(rel.name, rel.pass);
            return out;
        },
        py::arg("n"), py::arg("trials") = 20, py::arg("seed") = 20240601ULL);
}
