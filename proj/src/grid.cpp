#include "hk/grid.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "hk/oracle.hpp"

namespace hk {

void parallel_for(std::size_t count, i64 jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 0) jobs = static_cast<i64>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (i64 t = 0; t < std::min<i64>(jobs, static_cast<i64>(count)); ++t)
        pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoll(text);
    } else {
        r.lo = std::stoll(text.substr(0, dots));
        r.hi = std::stoll(text.substr(dots + 2));
    }
    if (r.empty()) throw std::invalid_argument("empty range: " + text);
    return r;
}

namespace {

struct GridPoint {
    i64 a, c, d, p, n, q;
};

std::vector<GridPoint> grid_points(Range a, Range c, Range d, i64 p, i64 n_max) {
    constexpr i64 q_cap = 1'000'000'000;
    std::vector<GridPoint> pts;
    for (i64 av = a.lo; av <= a.hi; ++av)
        for (i64 cv = c.lo; cv <= c.hi; ++cv)
            for (i64 dv = d.lo; dv <= d.hi; ++dv)
                for (i64 n = 1, q = p; n <= n_max; ++n, q *= p) {
                    if (q > q_cap) throw std::invalid_argument("table: p^n exceeds the supported range");
                    pts.push_back({av, cv, dv, p, n, q});
                }
    return pts;
}

Int table_value(const GridPoint& g, const std::string& tier) {
    if (tier == "enum") return hilbert_kunz(g.a, g.c, g.d, g.q).value;
    if (tier == "oracle") return hk_colength(g.a, g.c, g.d, g.q, g.p);
    if (tier == "closed") return hk_closed(g.a, g.c, g.d, g.q).value;
    if (tier == "all") {
        Int e = hilbert_kunz(g.a, g.c, g.d, g.q).value;
        Int o = hk_colength(g.a, g.c, g.d, g.q, g.p);
        Int cl = hk_closed(g.a, g.c, g.d, g.q).value;
        if (e != o || e != cl) {
            std::ostringstream os;
            os << "tiers disagree at a=" << g.a << " c=" << g.c << " d=" << g.d
               << " q=" << g.q << ": enum=" << e.get_str() << " oracle=" << o.get_str()
               << " closed=" << cl.get_str();
            throw tier_mismatch_error(os.str());
        }
        return e;
    }
    throw std::invalid_argument("unknown tier: " + tier);
}

}  // namespace

std::vector<TableRow> table_rows(const TableSpec& spec) {
    auto pts = grid_points(spec.a, spec.c, spec.d, spec.p, spec.n_max);
    std::vector<TableRow> rows(pts.size());
    parallel_for(pts.size(), spec.jobs, [&](std::size_t i) {
        const auto& g = pts[i];
        rows[i] = TableRow{g.a, g.c, g.d, g.p, g.n, g.q,
                           table_value(g, spec.tier), ehk(g.a, g.c, g.d), spec.tier};
    });
    return rows;  // grid_points emits in (a, c, d, n) order already
}

void emit_csv(const std::vector<TableRow>& rows, std::ostream& os) {
    os << "a,c,d,p,n,q,hk,ehk_num,ehk_den,tier\n";
    for (const auto& r : rows) {
        os << r.a << ',' << r.c << ',' << r.d << ',' << r.p << ',' << r.n << ',' << r.q
           << ',' << r.hk.get_str() << ',' << r.ehk_value.get_num().get_str() << ','
           << r.ehk_value.get_den().get_str() << ',' << r.tier << '\n';
    }
}

void emit_json(const std::vector<TableRow>& rows, std::ostream& os) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        obj["a"] = r.a;
        obj["c"] = r.c;
        obj["d"] = r.d;
        obj["p"] = r.p;
        obj["n"] = r.n;
        obj["q"] = r.q;
        obj["hk"] = r.hk.get_str();  // decimal string: exact at any size
        obj["ehk_num"] = r.ehk_value.get_num().get_str();
        obj["ehk_den"] = r.ehk_value.get_den().get_str();
        obj["tier"] = r.tier;
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
}

VerifyReport run_verify(const VerifySpec& spec) {
    VerifyReport report;
    {
        std::ostringstream os;
        os << "a=" << spec.a.lo << ".." << spec.a.hi << " c=" << spec.c.lo << ".." << spec.c.hi
           << " d=" << spec.d.lo << ".." << spec.d.hi << " primes=";
        for (size_t i = 0; i < spec.primes.size(); ++i)
            os << (i ? "," : "") << spec.primes[i];
        os << " q<=" << spec.q_oracle_max << " (oracle), q<=" << spec.q_closed_max << " (closed)";
        report.grid = os.str();
    }

    struct Task {
        i64 a, c, d, q, p;
    };
    auto make_tasks = [&](i64 q_max) {
        std::vector<Task> tasks;
        for (i64 p : spec.primes)
            for (i64 q = p; q <= q_max; q *= p)
                for (i64 a = spec.a.lo; a <= spec.a.hi; ++a)
                    for (i64 c = spec.c.lo; c <= spec.c.hi; ++c)
                        for (i64 d = spec.d.lo; d <= spec.d.hi; ++d)
                            tasks.push_back({a, c, d, q, p});
        return tasks;
    };

    using clock = std::chrono::steady_clock;

    // phase 1: enumeration vs oracle
    {
        auto tasks = make_tasks(spec.q_oracle_max);
        std::vector<std::pair<Int, Int>> values(tasks.size());
        auto t0 = clock::now();
        parallel_for(tasks.size(), spec.jobs, [&](std::size_t i) {
            const auto& t = tasks[i];
            values[i] = {hilbert_kunz(t.a, t.c, t.d, t.q).value,
                         hk_colength(t.a, t.c, t.d, t.q, t.p)};
        });
        report.oracle_seconds = std::chrono::duration<double>(clock::now() - t0).count();
        report.oracle_instances = static_cast<i64>(tasks.size());
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (values[i].first != values[i].second) {
                const auto& t = tasks[i];
                report.mismatches.push_back(
                    {t.a, t.c, t.d, t.q, t.p, "enum", "oracle", values[i].first, values[i].second});
            }
        }
    }

    // phase 2: closed form vs enumeration, plus compact-variant bookkeeping
    {
        auto tasks = make_tasks(spec.q_closed_max);
        std::vector<std::pair<Int, Int>> values(tasks.size());
        std::vector<std::vector<VariantDeviation>> variants(tasks.size());
        auto t0 = clock::now();
        parallel_for(tasks.size(), spec.jobs, [&](std::size_t i) {
            const auto& t = tasks[i];
            values[i] = {hk_closed(t.a, t.c, t.d, t.q).value,
                         hilbert_kunz(t.a, t.c, t.d, t.q).value};
            variants[i] = closed_form_variants(t.a, t.c, t.d, t.q);
        });
        report.closed_seconds = std::chrono::duration<double>(clock::now() - t0).count();
        report.closed_instances = static_cast<i64>(tasks.size());
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (values[i].first != values[i].second) {
                const auto& t = tasks[i];
                report.mismatches.push_back(
                    {t.a, t.c, t.d, t.q, t.p, "closed", "enum", values[i].first, values[i].second});
            }
            for (const auto& dev : variants[i]) ++report.variant_deviations[dev.subterm];
        }
    }
    return report;
}

std::string verify_to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "verification grid: " << r.grid << "\n";
    os << "enum vs oracle:  " << r.oracle_instances << " instances\n";
    os << "closed vs enum:  " << r.closed_instances << " instances\n";
    if (r.mismatches.empty()) {
        os << "result: PASS (all tiers agree exactly)\n";
    } else {
        os << "result: FAIL (" << r.mismatches.size() << " mismatches)\n";
        for (const auto& m : r.mismatches) {
            os << "  a=" << m.a << " c=" << m.c << " d=" << m.d << " q=" << m.q
               << " p=" << m.p << ": " << m.left_tier << "=" << m.left.get_str()
               << " != " << m.right_tier << "=" << m.right.get_str() << "\n";
        }
    }
    os << "compact-transcription deviations (informational; the assembly always "
          "uses the generally valid forms):\n";
    if (r.variant_deviations.empty()) {
        os << "  none on this grid\n";
    } else {
        for (const auto& [name, count] : r.variant_deviations)
            os << "  " << name << ": " << count << " grid points\n";
    }
    os << "timing:\n";
    os << "  enum vs oracle: " << r.oracle_seconds << " s\n";
    os << "  closed vs enum: " << r.closed_seconds << " s\n";
    return os.str();
}

}  // namespace hk
