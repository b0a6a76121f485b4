#include "chroma/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "chroma/errors.hpp"
#include "chroma/json_io.hpp"

namespace chroma {

std::vector<std::vector<std::vector<int>>> ordered_partitions(std::vector<int> items) {
    std::sort(items.begin(), items.end());
    std::vector<std::vector<std::vector<int>>> out;
    if (items.empty()) return out;
    // Place items one at a time: into an existing block or as a new block
    // at any position.
    std::vector<std::vector<int>> current;
    std::function<void(std::size_t)> place = [&](std::size_t idx) {
        if (idx == items.size()) {
            out.push_back(current);
            return;
        }
        for (std::size_t b = 0; b < current.size(); ++b) {
            current[b].push_back(items[idx]);
            place(idx + 1);
            current[b].pop_back();
        }
        for (std::size_t pos = 0; pos <= current.size(); ++pos) {
            current.insert(current.begin() + static_cast<long>(pos), {items[idx]});
            place(idx + 1);
            current.erase(current.begin() + static_cast<long>(pos));
        }
    };
    place(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Simplex> ordered_partition_facets(const Simplex& sigma) {
    std::vector<Simplex> facets;
    for (const auto& partition : ordered_partitions(sigma.colors()))
        facets.push_back(ordered_partition_facet(sigma, partition));
    std::sort(facets.begin(), facets.end());
    return facets;
}

void for_each_complete_schedule(const ProgramConfig& cfg,
                                const std::vector<Label>& inputs,
                                const std::function<void(const std::vector<int>&)>& fn) {
    cfg.validate();
    std::vector<ProcessState> procs;
    for (int i = 0; i <= cfg.n; ++i)
        procs.push_back(initial_state(cfg, i, inputs[static_cast<std::size_t>(i)]));
    Memory mem;
    std::vector<int> path;
    std::function<void(const std::vector<ProcessState>&, const Memory&)> walk =
        [&](const std::vector<ProcessState>& ps, const Memory& m) {
            bool terminal = true;
            for (const ProcessState& p : ps) terminal = terminal && p.done();
            if (terminal) {
                fn(path);
                return;
            }
            for (int pid = 0; pid < static_cast<int>(ps.size()); ++pid) {
                if (ps[static_cast<std::size_t>(pid)].done()) continue;
                std::vector<ProcessState> next = ps;
                Memory next_mem = m;
                step_process(cfg, next[static_cast<std::size_t>(pid)], next_mem, nullptr);
                path.push_back(pid);
                walk(next, next_mem);
                path.pop_back();
            }
        };
    walk(procs, mem);
}

namespace {

Simplex decided_outputs(const ExecutionTrace& trace) {
    std::vector<Label> verts;
    for (const Outcome& o : trace.outcomes)
        if (o.kind == OutcomeKind::Decided && o.vertex) verts.push_back(*o.vertex);
    return Simplex(std::move(verts));
}

std::string show_schedule(const std::vector<int>& steps) {
    std::ostringstream os;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) os << ',';
        os << steps[i];
    }
    return os.str();
}

CrashSet random_crashes(std::mt19937_64& rng, int n, int horizon) {
    CrashSet crashes;
    for (int pid = 0; pid <= n; ++pid)
        if (rng() % 4 == 0)
            crashes.push_back({pid, static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                                horizon))});
    return crashes;
}

}  // namespace

std::vector<int> worked_example_schedule() {
    // The recursive-call chain of the worked renaming execution: processes
    // 1 and 2 see each other in rounds (1,2) and (1,1) and carry (i,{1,2});
    // process 0 sees everyone at (1,2) and carries (0,{0,1,2}); processes 0
    // and 2 then pair up through (2,2) and (2,1); process 1 finishes alone.
    std::vector<int> s;
    auto woscan_writes = [&s](std::initializer_list<int> pids) {
        for (int p : pids) s.push_back(p);
    };
    auto collects = [&s](std::initializer_list<int> pids) {
        for (int p : pids)
            for (int r = 0; r < 3; ++r) s.push_back(p);
    };
    woscan_writes({1, 2});
    collects({1, 2});
    woscan_writes({0});
    collects({0});  // (1,2): 0 returns the full view
    woscan_writes({1, 2});
    collects({1, 2});  // (1,1): both return (i,{1,2})
    woscan_writes({0, 2});
    collects({0, 2});  // (2,2): both descend
    woscan_writes({0, 2});
    collects({0, 2});  // (2,1): 0 -> 4, 2 -> 1
    woscan_writes({1});
    collects({1});  // (2,2): 1 sees all three, -> 2
    return s;
}

std::vector<std::string> check_lemma1(const ExecutionTrace& trace) {
    std::vector<std::string> violations;
    std::map<StageId, std::set<Label>> written;
    for (const TraceStep& s : trace.steps)
        if (s.is_write) written[s.stage].insert(*s.written);
    std::map<StageId, std::vector<Label>> results;
    for (const RoundRecord& r : trace.rounds) results[r.stage].push_back(r.result);
    for (const auto& [stage, values] : written) {
        if (static_cast<int>(values.size()) != stage.d + 1) continue;
        Simplex sigma(std::vector<Label>(values.begin(), values.end()));
        auto it = results.find(stage);
        if (it == results.end()) continue;
        Simplex tau(it->second);
        if (!schlegel_simplex(sigma, stage.d).contains(tau))
            violations.push_back("round " + stage.str() + ": results " + tau.str() +
                                 " outside Sch^" + std::to_string(stage.d) + " " +
                                 sigma.str());
    }
    return violations;
}

std::vector<std::string> check_lemma2(const ExecutionTrace& trace, const Tower& tower) {
    std::vector<std::string> violations;
    if (trace.K != 1 || tower.iterations() != 1) {
        violations.push_back("lemma2 applies to single-iteration traces");
        return violations;
    }
    const int n = trace.n;
    std::set<Label> inputs(trace.inputs.begin(), trace.inputs.end());

    std::vector<std::set<Label>> sigma(static_cast<std::size_t>(n) + 2);
    sigma[static_cast<std::size_t>(n) + 1] = inputs;
    std::vector<std::set<Label>> tau(static_cast<std::size_t>(n) + 2);
    for (const RoundRecord& r : trace.rounds)
        sigma[static_cast<std::size_t>(r.stage.d)].insert(r.result);
    for (int d = n; d >= 0; --d) {
        const auto ud = static_cast<std::size_t>(d);
        tau[ud] = tau[ud + 1];
        for (const RoundRecord& r : trace.rounds)
            if (r.stage.d == d && r.success) tau[ud].insert(r.result);
    }

    for (int d = n; d >= 0; --d) {
        const auto ud = static_cast<std::size_t>(d);
        int overlap = 0;
        for (const Label& v : sigma[ud])
            if (inputs.count(v)) ++overlap;
        if (overlap - 1 >= d)
            violations.push_back("(i) fails at d=" + std::to_string(d));

        std::set<Label> expect = tau[ud + 1];
        for (const Label& v : sigma[ud])
            if (!inputs.count(v)) expect.insert(v);
        if (tau[ud] != expect)
            violations.push_back("(ii) join decomposition fails at d=" +
                                 std::to_string(d));
        for (const Label& v : tau[ud])
            if (inputs.count(v))
                violations.push_back("(ii) tau_" + std::to_string(d) + " meets inputs");

        std::set<Label> join = tau[ud + 1];
        join.insert(sigma[ud].begin(), sigma[ud].end());
        try {
            Simplex js{std::vector<Label>(join.begin(), join.end())};
            if (!tower.complex_at(tower.position(StageId{1, d})).contains(js))
                violations.push_back("(iii) " + js.str() + " outside stage (1," +
                                     std::to_string(d) + ") complex");
        } catch (const ColorClash&) {
            violations.push_back("(iii) join not color-disjoint at d=" +
                                 std::to_string(d));
        }
    }

    Simplex outputs = decided_outputs(trace);
    const bool member = tower.final_complex().contains(outputs);
    if (!member)
        violations.push_back("outputs " + outputs.str() + " outside Ch of inputs");
    if (is_ch_simplex(Simplex(trace.inputs), outputs.vertices()) != member)
        violations.push_back("oracle and subdivision disagree on " + outputs.str());
    return violations;
}

bool scan_variants_agree(int n, const std::vector<int>& schedule,
                         const CrashSet& crashes, std::string* why) {
    ProgramConfig a;
    a.protocol = Protocol::WriteScan;
    a.n = n;
    ProgramConfig b = a;
    b.protocol = Protocol::ObliviousScan;
    ScriptedScheduler sa(schedule), sb(schedule);
    ExecutionTrace ta = run_protocol(a, base_inputs(n), sa, crashes);
    ExecutionTrace tb = run_protocol(b, base_inputs(n), sb, crashes);
    ta.protocol = tb.protocol;  // compare everything but the family tag
    if (trace_to_json(ta) == trace_to_json(tb)) return true;
    if (why) *why = "traces diverge on schedule " + show_schedule(schedule);
    return false;
}

namespace {

struct SuiteState {
    std::vector<CheckResult> results;
    std::vector<std::vector<int>> schedules_n1;
    std::vector<std::string> lemma_violations;  // streamed from every trace
    std::size_t lemma_traces = 0;
};

void add(SuiteState& st, const std::string& name, bool pass, std::string details) {
    st.results.push_back({name, pass, std::move(details)});
}

std::string first_or(const std::vector<std::string>& violations, std::string ok) {
    if (violations.empty()) return ok;
    return std::to_string(violations.size()) + " violation(s); first: " +
           violations.front();
}

void check_subdivision_counts(SuiteState& st) {
    std::vector<std::string> bad;
    const Simplex pt = Simplex::of_bases({0});
    const Simplex edge = Simplex::of_bases({0, 1});
    const Simplex tri = Simplex::of_bases({0, 1, 2});
    auto expect = [&bad](bool cond, const std::string& what) {
        if (!cond) bad.push_back(what);
    };
    expect(schlegel_simplex(pt, 0).facet_count() == 1, "Sch^0 point: 1 facet");
    expect(schlegel_simplex(edge, 1).facet_count() == 3, "Sch^1 edge: 3 facets");
    expect(schlegel_simplex(tri, 2).facet_count() == 7, "Sch^2 triangle: 7 facets");
    expect(schlegel_simplex(edge, 2) == Complex::cls(edge),
           "Sch^2 of an edge is trivial");
    expect(chromatic_subdivision(Complex::cls(pt)).facet_count() == 1, "Ch point: 1");
    expect(chromatic_subdivision(Complex::cls(edge)).facet_count() == 3, "Ch edge: 3");
    expect(chromatic_subdivision(Complex::cls(tri)).facet_count() == 13,
           "Ch triangle: 13");
    Tower t22(Complex::cls(tri), 2);
    expect(t22.final_complex().facet_count() == 169, "Ch^2 triangle: 169 facets");
    expect(static_cast<int>(t22.stages().size()) == 6, "tower has K*(n+1) stages");
    add(st, "subdivision-counts", bad.empty(), first_or(bad, "1/3/7 facets per Schlegel, 1/3/13 per Ch, 169 for Ch^2"));
}

void check_theorem2(SuiteState& st) {
    std::vector<std::string> bad;
    for (int d = 0; d <= 2; ++d) {
        std::vector<int> colors;
        for (int i = 0; i <= d; ++i) colors.push_back(i);
        const Simplex sigma = Simplex::of_bases(colors);
        const Complex built = chromatic_subdivision(Complex::cls(sigma));
        std::vector<Simplex> facets = built.facets();
        std::vector<Simplex> oracle = ordered_partition_facets(sigma);
        if (facets != oracle)
            bad.push_back("facet sets differ at dim " + std::to_string(d));
        for (const Simplex& f : facets)
            if (!is_ch_simplex(sigma, f.vertices()))
                bad.push_back("facet " + f.str() + " rejected by the oracle");
    }
    // a pure multi-facet complex: the boundary of the triangle
    const Complex boundary = Complex::cls(Simplex::of_bases({0, 1, 2})).skeleton(1);
    const Complex built = chromatic_subdivision(boundary);
    std::set<Simplex> expected;
    for (const Simplex& e : boundary.facets())
        for (const Simplex& f : ordered_partition_facets(e)) expected.insert(f);
    if (built.facets() != std::vector<Simplex>(expected.begin(), expected.end()))
        bad.push_back("boundary complex subdivision differs from per-facet oracle");
    add(st, "theorem2-kozlov", bad.empty(),
        first_or(bad, "Sch composition equals the ordered-partition oracle (dims 0-2)"));
}

void check_theorem3_n1(SuiteState& st) {
    std::vector<std::string> bad;
    ProgramConfig cfg;
    cfg.protocol = Protocol::ObliviousScan;
    cfg.n = 1;
    const Complex ch = chromatic_subdivision(Complex::cls(Simplex::of_bases({0, 1})));

    EnumerationOptions crash_free;
    EnumerationResult free_runs = enumerate_executions(cfg, base_inputs(1), crash_free);
    std::set<Simplex> observed;
    for (const auto& o : free_runs.outputs) observed.insert(o.outputs);
    std::set<Simplex> facets(ch.facets().begin(), ch.facets().end());
    if (observed != facets)
        bad.push_back("crash-free outputs != the 3 facets of Ch of the edge");

    EnumerationOptions crashy;
    crashy.allow_crashes = true;
    EnumerationResult crashy_runs = enumerate_executions(cfg, base_inputs(1), crashy);
    std::set<Simplex> observed_crashy;
    for (const auto& o : crashy_runs.outputs) observed_crashy.insert(o.outputs);
    std::vector<Simplex> all_faces = ch.all_simplexes();
    if (observed_crashy != std::set<Simplex>(all_faces.begin(), all_faces.end()))
        bad.push_back("crashy outputs != all faces of Ch of the edge");

    // witness soundness: replaying a witness reproduces its output simplex
    for (const auto& o : crashy_runs.outputs) {
        ScriptedScheduler sched(o.witness);
        ExecutionTrace t = run_protocol(cfg, base_inputs(1), sched);
        if (decided_outputs(t) != o.outputs) {
            bad.push_back("witness replay mismatch for " + o.outputs.str());
            break;
        }
    }
    add(st, "theorem3-exhaustive-n1", bad.empty(),
        first_or(bad, std::to_string(free_runs.states_visited) + "+" +
                          std::to_string(crashy_runs.states_visited) +
                          " states; outputs match Ch faces exactly"));
}

void check_theorem3_n2(SuiteState& st, const Tower& t21, int samples,
                       std::uint64_t seed) {
    std::vector<std::string> bad;
    ProgramConfig cfg;
    cfg.protocol = Protocol::ObliviousScan;
    cfg.n = 2;
    const Complex& ch = t21.final_complex();
    const Simplex tri = Simplex::of_bases({0, 1, 2});

    EnumerationResult free_runs = enumerate_executions(cfg, base_inputs(2), {});
    std::set<Simplex> dfs_outputs;
    for (const auto& o : free_runs.outputs) {
        dfs_outputs.insert(o.outputs);
        if (!ch.contains(o.outputs))
            bad.push_back("enumerated output " + o.outputs.str() + " outside Ch");
    }

    auto lemma_scan = [&st, &t21](const ExecutionTrace& t) {
        ++st.lemma_traces;
        for (std::string& v : check_lemma1(t)) st.lemma_violations.push_back(std::move(v));
        for (std::string& v : check_lemma2(t, t21))
            st.lemma_violations.push_back(std::move(v));
    };

    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        RandomScheduler sched(rng());
        CrashSet crashes = (i % 2 == 0) ? CrashSet{} : random_crashes(rng, 2, 40);
        ExecutionTrace t = run_protocol(cfg, base_inputs(2), sched, crashes);
        Simplex out = decided_outputs(t);
        const bool member = ch.contains(out);
        if (!member)
            bad.push_back("sampled output " + out.str() + " outside Ch (schedule " +
                          show_schedule(t.executed) + ")");
        if (is_ch_simplex(tri, out.vertices()) != member)
            bad.push_back("oracle disagrees on sampled output " + out.str());
        lemma_scan(t);
    }

    std::set<Simplex> targeted_outputs;
    for (const auto& partition : ordered_partitions({0, 1, 2})) {
        ScriptedScheduler sched(targeted_schedule(partition, 2));
        ExecutionTrace t = run_protocol(cfg, base_inputs(2), sched);
        Simplex out = decided_outputs(t);
        if (out != ordered_partition_facet(tri, partition))
            bad.push_back("targeted schedule missed its facet for partition " +
                          show_schedule(partition.front()));
        targeted_outputs.insert(out);
        lemma_scan(t);
    }
    std::set<Simplex> combined = dfs_outputs;
    combined.insert(targeted_outputs.begin(), targeted_outputs.end());
    if (combined != std::set<Simplex>(ch.facets().begin(), ch.facets().end()))
        bad.push_back("enumerated+targeted outputs do not cover the 13 facets");

    add(st, "theorem3-n2", bad.empty(),
        first_or(bad, "DFS (" + std::to_string(free_runs.states_visited) +
                          " states) within Ch; " + std::to_string(samples) +
                          " samples in Ch; 13 targeted facets realized"));
}

void check_round_lemmas(SuiteState& st, const Tower& t11) {
    std::vector<std::string> bad = std::move(st.lemma_violations);
    ProgramConfig cfg;
    cfg.protocol = Protocol::ObliviousScan;
    cfg.n = 1;
    std::size_t checked = st.lemma_traces;
    for_each_complete_schedule(cfg, base_inputs(1), [&](const std::vector<int>& path) {
        st.schedules_n1.push_back(path);
        // every prefix is a complete crashy execution
        for (std::size_t len = 0; len <= path.size(); ++len) {
            std::vector<int> prefix(path.begin(), path.begin() + static_cast<long>(len));
            ScriptedScheduler sched(prefix);
            ExecutionTrace t = run_protocol(cfg, base_inputs(1), sched);
            for (std::string& v : check_lemma1(t)) bad.push_back(std::move(v));
            for (std::string& v : check_lemma2(t, t11)) bad.push_back(std::move(v));
            ++checked;
        }
    });
    add(st, "round-lemmas", bad.empty(),
        first_or(bad, std::to_string(checked) + " traces, zero violations"));
}

void check_scan_equivalence(SuiteState& st, int samples, std::uint64_t seed) {
    std::vector<std::string> bad;
    std::string why;
    for (const auto& schedule : st.schedules_n1)
        if (!scan_variants_agree(1, schedule, {}, &why)) {
            bad.push_back(why);
            break;
        }
    ProgramConfig cfg;
    cfg.protocol = Protocol::ObliviousScan;
    cfg.n = 2;
    std::mt19937_64 rng(seed ^ 0xabcdefULL);
    for (int i = 0; i < samples && bad.empty(); ++i) {
        RandomScheduler sched(rng());
        CrashSet crashes = (i % 2 == 0) ? CrashSet{} : random_crashes(rng, 2, 40);
        ExecutionTrace t = run_protocol(cfg, base_inputs(2), sched, crashes);
        if (!scan_variants_agree(2, t.executed, {}, &why)) bad.push_back(why);
    }
    add(st, "scan-equivalence", bad.empty(),
        first_or(bad, std::to_string(st.schedules_n1.size()) + " exhaustive n=1 + " +
                          std::to_string(samples) + " paired n=2 runs agree"));
}

void check_renaming(SuiteState& st, const Tower& t22, const Task& renaming,
                    int samples, std::uint64_t seed) {
    std::vector<std::string> bad;
    if (renaming.delta.entries.size() != t22.final_complex().vertices().size())
        bad.push_back("delta is not total on the final vertices");

    DecisionReport report = verify_decision_map(renaming, t22);
    if (!report.ok())
        bad.push_back("decision map: " + report.violations.front() + " (+" +
                      std::to_string(report.violations.size() - 1) + " more)");

    // figure anchor: every descendant of the central color-0 vertex gets 4
    const Label central0 =
        Label::pair(0, {Label::base(0), Label::base(1), Label::base(2)});
    std::size_t descendants = 0;
    for (const Label& w : t22.final_complex().vertices()) {
        if (w.color() != 0) continue;
        if (t22.composite_parent(t22.final_position(), t22.iteration_base_position(2),
                                 w) != central0)
            continue;
        ++descendants;
        if (renaming.delta.at(w) != 4)
            bad.push_back("descendant " + w.str() + " of the central vertex not 4");
    }
    if (descendants == 0) bad.push_back("central color-0 vertex has no descendants");

    ProgramConfig cfg;
    cfg.protocol = Protocol::Iterated;
    cfg.n = 2;
    cfg.K = 2;
    cfg.delta = &renaming.delta;
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    for (int i = 0; i < samples; ++i) {
        RandomScheduler sched(rng());
        CrashSet crashes = (i % 2 == 0) ? CrashSet{} : random_crashes(rng, 2, 60);
        ExecutionTrace t = run_protocol(cfg, base_inputs(2), sched, crashes);
        std::set<int> names;
        for (const Outcome& o : t.outcomes) {
            if (o.kind != OutcomeKind::Decided) continue;
            if (!o.output || *o.output < 0 || *o.output > 4) {
                bad.push_back("output outside 0..4");
                continue;
            }
            if (!names.insert(*o.output).second)
                bad.push_back("duplicate name " + std::to_string(*o.output) +
                              " on schedule " + show_schedule(t.executed));
        }
    }
    for (int pid = 0; pid <= 2; ++pid) {
        std::vector<int> solo(24, pid);
        ScriptedScheduler sched(solo);
        ExecutionTrace t = run_protocol(cfg, base_inputs(2), sched);
        const Outcome& o = t.outcomes[static_cast<std::size_t>(pid)];
        if (o.kind != OutcomeKind::Decided || !o.output || *o.output != 0)
            bad.push_back("solo run of process " + std::to_string(pid) +
                          " did not output 0");
    }
    add(st, "renaming-end-to-end", bad.empty(),
        first_or(bad, std::to_string(samples) +
                          " runs: distinct names 0..4, solo outputs 0, decision map clean"));
}

void check_optimizer(SuiteState& st, const Tower& t22, const Task& renaming,
                     const SpecializationTable* injected, int samples,
                     std::uint64_t seed) {
    std::vector<std::string> bad;
    DescendantIndex index(t22);
    SpecializationTable fresh = specialize(renaming, t22, index);
    const SpecializationTable& table = injected ? *injected : fresh;

    if (table.tower_hash() != t22.hash())
        bad.push_back("table provenance hash does not match the tower");
    if (table.task_id() != renaming.id)
        bad.push_back("table was built for task '" + table.task_id() + "'");

    const Label b0 = Label::base(0);
    const Label b1 = Label::base(1);
    const Label b2 = Label::base(2);
    const Label v12 = Label::pair(2, {b1, b2});
    const Label v02 = Label::pair(2, {b0, b2});
    const Label central0 = Label::pair(0, {b0, b1, b2});
    const Label central1 = Label::pair(1, {b0, b1, b2});
    try {
        auto expect_entry = [&](int pid, StageId stage, const Label& v,
                                std::optional<int> want, const char* what) {
            if (table.lookup(pid, stage, v) != want)
                bad.push_back(std::string("table entry wrong: ") + what);
        };
        expect_entry(2, {2, 2}, v12, 1, "pid2 (2,2) (2,{1,2}) -> decide 1");
        expect_entry(2, {2, 2}, v02, 1, "pid2 (2,2) (2,{0,2}) -> decide 1");
        expect_entry(0, {2, 2}, central0, 4, "pid0 (2,2) (0,{0,1,2}) -> decide 4");
        expect_entry(1, {1, 0}, b1, 0, "pid1 (1,0) base -> decide 0 (d=0 skip)");
        expect_entry(2, {1, 2}, b2, std::nullopt, "pid2 (1,2) base -> continue");
        expect_entry(1, {2, 2}, central1, std::nullopt, "pid1 (2,2) central -> continue");
        expect_entry(1, {2, 0}, central1, 3, "pid1 (2,0) central -> decide 3");
    } catch (const TableMiss& e) {
        bad.push_back(std::string("table miss: ") + e.what());
    }

    // singleton criterion, recomputed by brute force over final vertices
    for (const auto& e : fresh.entries()) {
        std::set<int> image;
        const int entry_pos = t22.entry_position(e.stage);
        for (const Label& u : t22.final_complex().vertices()) {
            if (u.color() != e.pid) continue;
            if (t22.composite_parent(t22.final_position(), entry_pos, u) == e.value)
                image.insert(renaming.delta.at(u));
        }
        std::optional<int> want;
        if (image.size() == 1) want = *image.begin();
        if (want != e.decide) {
            bad.push_back("brute-force singleton check disagrees at " + e.stage.str() +
                          " " + e.value.str());
            break;
        }
    }

    // descendant refinement: child sets shrink along the parent chain
    for (int pos = 1; pos <= t22.final_position(); ++pos) {
        for (const Label& v : t22.complex_at(pos).vertices()) {
            const Label parent = t22.stages()[static_cast<std::size_t>(pos - 1)]
                                     .parent_step.at(v);
            const auto& fine = index.descendants(pos, v);
            const auto& coarse = index.descendants(pos - 1, parent);
            if (!std::includes(coarse.begin(), coarse.end(), fine.begin(), fine.end())) {
                bad.push_back("descendant refinement fails at position " +
                              std::to_string(pos));
                break;
            }
        }
    }

    // monotonicity: once decided, later stages with the same value agree
    for (const auto& e : fresh.entries()) {
        if (!e.decide) continue;
        for (int d = e.stage.d - 1; d >= 0; --d) {
            if (fresh.lookup(e.pid, {e.stage.k, d}, e.value) != e.decide) {
                bad.push_back("decide entry not monotone within iteration at " +
                              e.stage.str());
                break;
            }
        }
    }

    // the worked cost example
    try {
        PairedRun pr = paired_run_generic_script(renaming, table,
                                                 worked_example_schedule());
        auto out = [](const ExecutionTrace& t, int pid) {
            return t.outcomes[static_cast<std::size_t>(pid)].output;
        };
        if (out(pr.generic, 0) != std::optional<int>(4) ||
            out(pr.generic, 1) != std::optional<int>(2) ||
            out(pr.generic, 2) != std::optional<int>(1))
            bad.push_back("worked example outputs are not (4,2,1)");
        if (pr.generic_ops.writes[2] != 4 || pr.generic_ops.reads[2] != 12)
            bad.push_back("worked example: generic process 2 cost is not 4w+12r");
        if (pr.optimized_ops.writes[2] != 2 || pr.optimized_ops.reads[2] != 6)
            bad.push_back("worked example: optimized process 2 cost is not 2w+6r");
    } catch (const Error& e) {
        bad.push_back(std::string("worked example failed: ") + e.what());
    }

    // sampled paired runs: outputs equal, optimized never costs more
    try {
        SavingsReport report =
            savings_report(renaming, table, samples, seed ^ 0x9a1eULL, 8);
        if (!report.dominance)
            bad.push_back("optimized ops exceeded generic ops on a paired run");
    } catch (const OutputMismatch& e) {
        bad.push_back(std::string(e.what()));
    } catch (const Error& e) {
        bad.push_back(std::string("paired runs failed: ") + e.what());
    }

    // exhaustive paired runs at n=1 over every optimized interleaving
    struct Small {
        const char* name;
        Task task;
        Tower* tower;
    };
    Tower t11(Complex::cls(Simplex::of_bases({0, 1})), 1);
    Tower t12(Complex::cls(Simplex::of_bases({0, 1})), 2);
    std::vector<Small> small_tasks;
    small_tasks.push_back({"parent-map n=1", parent_map_task(t11), &t11});
    small_tasks.push_back({"agreement n=1", chromatic_agreement_task(t11), &t11});
    small_tasks.push_back({"parent-map n=1 K=2", parent_map_task(t12), &t12});
    for (auto& s : small_tasks) {
        DescendantIndex idx(*s.tower);
        SpecializationTable tbl = specialize(s.task, *s.tower, idx);
        ProgramConfig opt;
        opt.protocol = Protocol::IteratedOpt;
        opt.n = s.task.n;
        opt.K = s.task.K;
        opt.delta = &s.task.delta;
        opt.table = &tbl;
        std::size_t runs = 0;
        try {
            for_each_complete_schedule(opt, base_inputs(s.task.n),
                                       [&](const std::vector<int>& path) {
                                           ScriptedScheduler sched(path);
                                           paired_run(s.task, tbl, sched);
                                           ++runs;
                                       });
        } catch (const Error& e) {
            bad.push_back(std::string(s.name) + ": " + e.what());
        }
        if (runs == 0) bad.push_back(std::string(s.name) + ": no complete runs");
    }

    add(st, "optimizer-soundness", bad.empty(),
        first_or(bad, "table entries, worked 4w12r->2w6r example, and " +
                          std::to_string(samples) + " paired runs agree"));
}

void check_degenerate_tables(SuiteState& st) {
    std::vector<std::string> bad;
    Tower t21(Complex::cls(Simplex::of_bases({0, 1, 2})), 1);

    Task parent = parent_map_task(t21);
    DescendantIndex idx(t21);
    SpecializationTable ptable = specialize(parent, t21, idx);
    for (const auto& e : ptable.entries())
        if (!e.decide) bad.push_back("parent-map table has a continue entry");
    ProgramConfig opt;
    opt.protocol = Protocol::IteratedOpt;
    opt.n = 2;
    opt.K = 1;
    opt.delta = &parent.delta;
    opt.table = &ptable;
    ScriptedScheduler nothing(std::vector<int>{});
    ExecutionTrace t = run_protocol(opt, base_inputs(2), nothing);
    OpCounters ops = count_ops(t);
    if (ops.total_writes + ops.total_reads != 0)
        bad.push_back("parent-map protocol touched shared memory");
    for (const Outcome& o : t.outcomes)
        if (o.kind != OutcomeKind::Decided || o.output != std::optional<int>(0))
            bad.push_back("parent-map protocol did not decide its own vertex");

    Task agreement = chromatic_agreement_task(t21);
    SpecializationTable atable = specialize(agreement, t21, idx);
    for (const auto& e : atable.entries()) {
        if (e.stage.d == 0 && !e.decide)
            bad.push_back("agreement table misses the d=0 skip at " + e.value.str());
        if (e.stage.d != 0 && e.decide)
            bad.push_back("agreement table decides early at " + e.stage.str());
    }
    add(st, "degenerate-specializations", bad.empty(),
        first_or(bad,
                 "parent-map runs with zero memory ops; agreement decides only at d=0"));
}

void check_read_order_probe(SuiteState& st, bool include_n2) {
    std::vector<std::string> notes;
    for (int n = 1; n <= (include_n2 ? 2 : 1); ++n) {
        ProgramConfig cfg;
        cfg.protocol = Protocol::ObliviousScan;
        cfg.n = n;
        for (bool crashes : {false, true}) {
            EnumerationOptions fixed;
            fixed.allow_crashes = crashes;
            EnumerationOptions branching = fixed;
            branching.branch_read_order = true;
            try {
                EnumerationResult a = enumerate_executions(cfg, base_inputs(n), fixed);
                EnumerationResult b =
                    enumerate_executions(cfg, base_inputs(n), branching);
                std::set<Simplex> sa, sb;
                for (const auto& o : a.outputs) sa.insert(o.outputs);
                for (const auto& o : b.outputs) sb.insert(o.outputs);
                notes.push_back("n=" + std::to_string(n) +
                                (crashes ? " crashy: " : " crash-free: ") +
                                (sa == sb ? "identical output sets"
                                          : "DIFFERENT output sets"));
            } catch (const Error& e) {
                notes.push_back("n=" + std::to_string(n) + ": probe skipped (" +
                                e.what() + ")");
            }
        }
    }
    std::string joined;
    for (const std::string& s : notes) joined += (joined.empty() ? "" : "; ") + s;
    add(st, "read-order-probe", true, joined);
}

}  // namespace

std::vector<CheckResult> verify_suite(const VerifyConfig& cfg) {
    SuiteState st;
    auto timed = [&st](auto&& fn) {
        const auto before = std::chrono::steady_clock::now();
        const std::size_t first = st.results.size();
        fn();
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - before;
        for (std::size_t i = first; i < st.results.size(); ++i)
            st.results[i].millis = elapsed.count();
    };

    timed([&] { check_subdivision_counts(st); });
    timed([&] { check_theorem2(st); });
    timed([&] { check_theorem3_n1(st); });

    Tower t11(Complex::cls(Simplex::of_bases({0, 1})), 1);
    Tower t21(Complex::cls(Simplex::of_bases({0, 1, 2})), 1);
    if (!cfg.exhaustive_only)
        timed([&] { check_theorem3_n2(st, t21, cfg.samples, cfg.seed); });
    timed([&] { check_round_lemmas(st, t11); });
    timed([&] {
        check_scan_equivalence(st, cfg.exhaustive_only ? 0 : cfg.samples, cfg.seed);
    });

    if (!cfg.exhaustive_only) {
        Tower t22(Complex::cls(Simplex::of_bases({0, 1, 2})), 2);
        Task renaming = renaming_task(t22);
        timed([&] { check_renaming(st, t22, renaming, cfg.samples, cfg.seed); });
        timed([&] {
            check_optimizer(st, t22, renaming, cfg.injected_table, cfg.samples,
                            cfg.seed);
        });
        timed([&] { check_degenerate_tables(st); });
    }
    timed([&] { check_read_order_probe(st, !cfg.exhaustive_only); });
    return st.results;
}

}  // namespace chroma
