#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "cli_support.hpp"
#include "stellar/classify.hpp"
#include "stellar/measure.hpp"
#include "stellar/oracle.hpp"

namespace stellar::cli {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct RecordResult {
    std::string line;
    bool failed = false;
};

// Run one handler per record, in parallel on request, preserving input order.
std::vector<RecordResult> map_records(
    const std::vector<StateRecord>& records, bool parallel,
    const std::function<RecordResult(const StateRecord&)>& handler) {
    std::vector<RecordResult> results(records.size());
    if (parallel) {
        std::vector<std::future<RecordResult>> futures;
        futures.reserve(records.size());
        for (const auto& rec : records)
            futures.push_back(std::async(std::launch::async, handler, std::cref(rec)));
        for (size_t i = 0; i < records.size(); ++i) results[i] = futures[i].get();
    } else {
        for (size_t i = 0; i < records.size(); ++i) results[i] = handler(records[i]);
    }
    return results;
}

RecordResult error_line(const std::string& id, const std::string& what) {
    ordered_json o;
    o["id"] = id;
    o["error"] = what;
    return {o.dump(), true};
}

json axis_json(const SymmetryReport& sym) {
    if (!sym.axis) return nullptr;
    return json::array({fmt12(sym.axis->x), fmt12(sym.axis->y), fmt12(sym.axis->z)});
}

// orthographic two-hemisphere plot, deterministic layout
void write_svg(std::ostream& out, const std::vector<StateRecord>& records, double tol) {
    const int disk_r = 140, pad = 30, row_h = 2 * disk_r + 2 * pad + 20;
    const int width = 4 * pad + 4 * disk_r + 120;
    int height = static_cast<int>(records.size()) * row_h + pad;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<style>text{font-family:monospace;font-size:11px}</style>\n";

    for (size_t r = 0; r < records.size(); ++r) {
        auto cons = find_roots(to_polynomial(records[r].state), tol);
        int cy = static_cast<int>(r) * row_h + pad + disk_r;
        int cx_front = pad + disk_r;
        int cx_back = 3 * pad + 3 * disk_r;

        out << "<text x=\"" << pad << "\" y=\"" << cy - disk_r - 8 << "\">" << records[r].id
            << "</text>\n";
        for (int side = 0; side < 2; ++side) {
            int cx = side == 0 ? cx_front : cx_back;
            out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << disk_r
                << "\" fill=\"none\" stroke=\"black\"/>\n";
            out << "<text x=\"" << cx - 28 << "\" y=\"" << cy + disk_r + 16 << "\">"
                << (side == 0 ? "z &#8805; 0" : "z &lt; 0") << "</text>\n";
        }
        for (const auto& star : cons.stars) {
            Vec3 v = to_unit_vector(star.root);
            bool front = v.z >= 0.0;
            int cx = front ? cx_front : cx_back;
            double px = cx + v.x * disk_r;
            double py = cy - v.y * disk_r;
            double marker = 4.0 + 3.0 * (star.multiplicity - 1);
            Spinor sp = root_to_spinor(star.root);
            out << "<circle cx=\"" << fmt(fmt12(px)) << "\" cy=\"" << fmt(fmt12(py))
                << "\" r=\"" << fmt(marker) << "\" fill=\"" << (front ? "#1f77b4" : "#d62728")
                << "\" fill-opacity=\"0.8\"/>\n";
            out << "<text x=\"" << fmt(fmt12(px + marker + 2)) << "\" y=\""
                << fmt(fmt12(py + 4)) << "\">a=" << fmt(fmt12(sp.alpha * 180.0 / std::numbers::pi))
                << "&#176; b=" << fmt(fmt12(sp.beta * 180.0 / std::numbers::pi))
                << "&#176; m=" << star.multiplicity << "</text>\n";
        }
    }
    out << "</svg>\n";
}

}  // namespace

int run_classify(const std::string& input, std::ostream& out, std::ostream& err,
                 const Options& opts) {
    std::vector<StateRecord> records;
    try {
        records = parse_state_records(input);
    } catch (const ParseError& e) {
        err << "classify: " << e.what() << "\n";
        return kExitParse;
    }

    auto results = map_records(records, opts.parallel, [&](const StateRecord& rec) {
        try {
            ClassReport r = classify_state(rec.state, opts.tol, opts.tol);
            ordered_json o;
            o["id"] = rec.id;
            o["class"] = to_string(r.label);
            o["partition"] = r.partition;
            o["group"] = r.group_label;
            if (r.symmetry.continuous)
                o["cyclic_order"] = "inf";
            else
                o["cyclic_order"] = r.symmetry.cyclic_order;
            o["axis"] = axis_json(r.symmetry);
            o["p"] = complex_pair(r.p);
            o["q"] = complex_pair(r.q);
            if (rec.state.n == 4) o["r"] = complex_pair(r.r);
            o["max_ghz"] = r.max_ghz;
            o["prerotated"] = r.prerotated;
            return RecordResult{o.dump(), false};
        } catch (const std::exception& e) {
            return error_line(rec.id, e.what());
        }
    });

    bool any_failed = false;
    for (const auto& r : results) {
        out << r.line << "\n";
        any_failed |= r.failed;
    }
    return any_failed ? kExitMath : kExitOk;
}

int run_measure(const std::string& input, std::ostream& out, std::ostream& err,
                const Options& opts) {
    std::vector<StateRecord> records;
    try {
        records = parse_state_records(input);
    } catch (const ParseError& e) {
        err << "measure: " << e.what() << "\n";
        return kExitParse;
    }

    auto results = map_records(records, opts.parallel, [&](const StateRecord& rec) {
        try {
            MeasureReport r = measure_state(rec.state, opts.tol);
            ordered_json o;
            o["id"] = rec.id;
            o["n"] = rec.state.n;
            o["dent"] = fmt12(r.dent_raw);
            o["dent_clamped"] = fmt12(r.dent_clamped);
            if (rec.state.n == 3) {
                o["a_ghz"] = complex_pair(r.d3.a_ghz);
                o["a_w"] = complex_pair(r.d3.a_w);
                o["a_sep"] = complex_pair(r.d3.a_sep);
            } else {
                o["a_ghz"] = complex_pair(r.d4.a_ghz);
                o["a_w4"] = complex_pair(r.d4.a_w4);
                o["a_w2x2"] = complex_pair(r.d4.a_w2x2);
                o["a_sep"] = complex_pair(r.d4.a_sep);
            }
            o["separable"] = r.separable;
            o["compressed"] = r.compressed;
            o["prerotated"] = r.prerotated;
            return RecordResult{o.dump(), false};
        } catch (const std::exception& e) {
            return error_line(rec.id, e.what());
        }
    });

    size_t failed = 0;
    for (const auto& r : results) {
        out << r.line << "\n";
        if (r.failed) ++failed;
    }
    return failed == results.size() ? kExitMath : kExitOk;
}

int run_constellation(const std::string& input, const std::string& format, std::ostream& out,
                      std::ostream& err, const Options& opts) {
    std::vector<StateRecord> records;
    try {
        records = parse_state_records(input);
    } catch (const ParseError& e) {
        err << "constellation: " << e.what() << "\n";
        return kExitParse;
    }

    if (format == "svg") {
        write_svg(out, records, opts.tol);
        return kExitOk;
    }

    bool any_failed = false;
    for (const auto& rec : records) {
        try {
            auto cons = find_roots(to_polynomial(rec.state), opts.tol);
            ordered_json o;
            o["id"] = rec.id;
            o["n"] = rec.state.n;
            auto stars = ordered_json::array();
            for (const auto& star : cons.stars) {
                Spinor sp = root_to_spinor(star.root);
                ordered_json s;
                s["alpha"] = fmt12(sp.alpha);
                s["beta"] = fmt12(sp.beta);
                s["multiplicity"] = star.multiplicity;
                stars.push_back(s);
            }
            o["stars"] = stars;
            out << o.dump() << "\n";
        } catch (const std::exception& e) {
            out << error_line(rec.id, e.what()).line << "\n";
            any_failed = true;
        }
    }
    return any_failed ? kExitMath : kExitOk;
}

int run_sweep(const std::string& spec_text, std::ostream& out, std::ostream& err,
              const Options& opts) {
    SweepSpec spec;
    try {
        spec = parse_sweep_spec(spec_text);
    } catch (const ParseError& e) {
        err << "sweep: " << e.what() << "\n";
        return kExitParse;
    }

    out << "t,root_re,root_im,class,dent,transition\n";
    Complex origin = spec.start.stars[spec.move_index].root.value;
    std::string prev_label;
    for (int i = 0; i <= spec.steps; ++i) {
        double t = spec.steps == 0 ? 0.0 : static_cast<double>(i) / spec.steps;
        Complex pos = origin + t * (spec.target - origin);
        Constellation cons = spec.start;
        cons.stars[spec.move_index].root = ExtComplex::finite(pos);

        std::string label, dent;
        try {
            SymmetricState state = from_constellation(cons);
            if (state.n == 3 || state.n == 4) {
                label = to_string(classify_state(state, opts.tol, opts.tol).label);
                double d = state.n == 3 ? dent3(state, opts.tol) : dent4(state, opts.tol);
                dent = fmt(fmt12(d));
            }
        } catch (const std::exception& e) {
            label = "error";
        }
        bool transition = i > 0 && label != prev_label;
        out << fmt(fmt12(t)) << "," << fmt(fmt12(pos.real())) << "," << fmt(fmt12(pos.imag()))
            << "," << label << "," << dent << "," << (transition ? "*" : "") << "\n";
        prev_label = label;
    }
    return kExitOk;
}

int run_selfcheck(std::ostream& out, const Options& opts) {
    bool all_ok = true;
    auto report = [&](const std::string& name, double value, bool ok,
                      const std::string& expected) {
        out << name << "=" << fmt(fmt12(value)) << (ok ? " ok" : " FAIL (expected " + expected + ")")
            << "\n";
        all_ok &= ok;
    };

    double r = 1.0 / std::sqrt(2.0);
    SymmetricState ghz3_state(3, {{r, 0}, {0, 0}, {0, 0}, {r, 0}});
    SymmetricState w3_state(3, {{0, 0}, {0, 0}, {1, 0}, {0, 0}});
    SymmetricState ghz4_state(4, {{r, 0}, {0, 0}, {0, 0}, {0, 0}, {r, 0}});
    SymmetricState w4_state(4, {{0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}});
    SymmetricState w2x2_state(4, {{0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}});

    try {
        // cube roots of unity
        auto cons = find_roots(to_polynomial(ghz3_state), opts.tol);
        double worst = 2.0;
        Complex w = std::exp(Complex{0, 2 * std::numbers::pi / 3});
        if (cons.stars.size() == 3) {
            worst = 0.0;
            for (const auto& star : cons.stars) {
                double best = 2.0;
                for (Complex target : {Complex{1, 0}, w, w * w})
                    best = std::min(best,
                                    chordal_distance(star.root, ExtComplex::finite(target)));
                worst = std::max(worst, best);
            }
        }
        report("ghz3_roots_dev", worst, worst <= 1e-9, "<= 1e-9");

        auto sym = detect_cyclic_symmetry(cons, opts.tol);
        report("ghz3_symmetry", sym.cyclic_order, sym.cyclic_order == 3, "3");

        double d_ghz3 = dent3(ghz3_state, opts.tol);
        double d_w3 = dent3(w3_state, opts.tol);
        report("dent3_ghz", d_ghz3, std::abs(d_ghz3 - 1.0) <= 1e-10, "1");
        report("dent3_w", d_w3, std::abs(d_w3 - 2.0 / 3.0) <= 1e-10, "2/3");

        double d_ghz4 = dent4(ghz4_state, opts.tol);
        double d_w4 = dent4(w4_state, opts.tol);
        double d_w22 = dent4(w2x2_state, opts.tol);
        report("dent4_ghz", d_ghz4, std::abs(d_ghz4 - 1.0) <= 1e-10, "1");
        report("dent4_w4", d_w4, std::abs(d_w4 - 0.5) <= 1e-10, "1/2");
        report("dent4_w2x2", d_w22, std::abs(d_w22 - 1.0 / 3.0) <= 1e-10, "1/3");
        report("dent4_hierarchy", (d_ghz4 > d_w4 && d_w4 > d_w22) ? 1.0 : 0.0,
               d_ghz4 > d_w4 && d_w4 > d_w22, "strict ordering");

        auto cg = classify_state(ghz3_state, opts.tol, opts.tol);
        report("classify_ghz3", cg.label == EntanglementClass::GHZ ? 1.0 : 0.0,
               cg.label == EntanglementClass::GHZ && cg.group_label == "C3", "GHZ/C3");
        auto cw = classify_state(w3_state, opts.tol, opts.tol);
        report("classify_w3", cw.label == EntanglementClass::W ? 1.0 : 0.0,
               cw.label == EntanglementClass::W && cw.group_label == "C2", "W/C2");
        auto cs = classify_state(SymmetricState(4, {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}),
                                 opts.tol, opts.tol);
        report("classify_sep4", cs.label == EntanglementClass::Separable4 ? 1.0 : 0.0,
               cs.label == EntanglementClass::Separable4, "Separable4");

        // product state detected through a numerically split triple root
        Spinor sp = Spinor::canonical(0.9, 1.1);
        auto prod = classify_state(symmetrize_spinors({sp, sp, sp}), opts.tol, opts.tol);
        report("classify_product3", prod.label == EntanglementClass::Separable ? 1.0 : 0.0,
               prod.label == EntanglementClass::Separable, "Separable");

        // pipeline roundtrips on deterministic pseudo-random states
        std::mt19937_64 rng(20240817);
        std::normal_distribution<double> dist(0.0, 1.0);
        double worst_fid = 1.0;
        for (int n = 2; n <= 5; ++n) {
            for (int rep = 0; rep < 10; ++rep) {
                std::vector<Complex> c(n + 1);
                for (auto& x : c) x = Complex{dist(rng), dist(rng)};
                auto s = normalize(SymmetricState(n, std::move(c)));
                auto cons_rt = find_roots(to_polynomial(s), opts.tol);
                worst_fid = std::min(worst_fid, fidelity(from_constellation(cons_rt), s));
            }
        }
        report("roundtrip_a_fidelity", worst_fid, worst_fid >= 1.0 - 1e-8, ">= 1 - 1e-8");

        double worst_root = 0.0;
        std::uniform_real_distribution<double> uz(-1.0, 1.0), ua(0.0, 2 * std::numbers::pi);
        for (int n = 3; n <= 4; ++n) {
            for (int rep = 0; rep < 5; ++rep) {
                std::vector<Spinor> spinors;
                for (int k = 0; k < n; ++k)
                    spinors.push_back(Spinor::canonical(ua(rng), std::acos(uz(rng))));
                auto full = oracle::brute_symmetrize(spinors);
                auto cons_b = find_roots(to_polynomial(dicke_project(full)), opts.tol);
                for (const auto& spn : spinors) {
                    ExtComplex expected = ExtComplex::finite(
                        std::tan(spn.beta / 2) * std::exp(Complex{0, spn.alpha}));
                    double best = 2.0;
                    for (const auto& star : cons_b.stars)
                        best = std::min(best, chordal_distance(star.root, expected));
                    worst_root = std::max(worst_root, best);
                }
            }
        }
        report("roundtrip_b_chordal", worst_root, worst_root <= 1e-7, "<= 1e-7");

        double pur_ghz = oracle::reduce_one(expand(ghz3_state), 0).purity();
        report("oracle_purity_ghz", pur_ghz, std::abs(pur_ghz - 0.5) <= 1e-10, "1/2");
        double pur_w = oracle::reduce_one(expand(normalize(w3_state)), 0).purity();
        report("oracle_purity_w", pur_w, std::abs(pur_w - 5.0 / 9.0) <= 1e-10, "5/9");
    } catch (const std::exception& e) {
        out << "selfcheck_exception=" << e.what() << " FAIL\n";
        all_ok = false;
    }

    out << (all_ok ? "selfcheck: all checks passed\n" : "selfcheck: FAILURES present\n");
    return all_ok ? kExitOk : kExitSelfcheck;
}

}  // namespace stellar::cli
