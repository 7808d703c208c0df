#include "relaxlab/cli_reports.hpp"

#include "relaxlab/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relaxlab {

namespace {

const char *yes_no(bool b) { return b ? "yes" : "no"; }

template <class F>
std::size_t count_if(const TaxonomyCard &card, F f) {
    return static_cast<std::size_t>(std::count_if(card.instances.begin(), card.instances.end(), f));
}

std::string fraction(std::size_t k, std::size_t n) { return std::to_string(k) + "/" + std::to_string(n); }

} // namespace

std::optional<DeadEndClass> TaxonomyCard::dead_ends() const {
    std::optional<DeadEndClass> worst;
    for (const auto &i : instances)
        if (!worst || i.dead_ends > *worst)
            worst = i.dead_ends;
    return worst;
}

HeuristicValue TaxonomyCard::mlmed() const {
    HeuristicValue m = 0;
    for (const auto &i : instances)
        m = std::max(m, i.mlmed);
    return m;
}

HeuristicValue TaxonomyCard::mbed() const {
    HeuristicValue m = 0;
    for (const auto &i : instances)
        m = std::max(m, i.mbed);
    return m;
}

bool TaxonomyCard::hplus_equals_gd() const {
    return std::all_of(instances.begin(), instances.end(), [](const auto &i) { return i.hplus_equals_gd; });
}

TaxonomyCard build_taxonomy_card(const TaxonomyOptions &opts) {
    if (!is_benchmark_family(opts.domain)) {
        std::string list;
        for (const auto &name : generator_names())
            if (is_benchmark_family(name))
                list += (list.empty() ? "" : ", ") + name;
        throw UsageError("no generator for family '" + opts.domain + "'; supported: " + list);
    }
    if (opts.size_lo > opts.size_hi)
        throw UsageError("empty size range");
    const auto &params = generator_params(opts.domain);
    if (params.empty())
        throw UsageError("family '" + opts.domain + "' has no size parameter");
    TaxonomyCard card;
    card.domain = opts.domain;
    card.size_param = params.front().name;
    if (opts.params.contains(card.size_param))
        throw UsageError("'" + card.size_param + "' is set by the size range");

    for (int size = opts.size_lo; size <= opts.size_hi; ++size) {
        GeneratorSpec spec{opts.domain, opts.params, opts.seed};
        spec.params[card.size_param] = size;
        spec = normalize(spec);
        Task task = generate(spec);

        TaxonomyInstance inst;
        inst.spec = format_generator_spec(spec);
        inst.size = size;
        StateSpace space = enumerate(task, HeuristicKind::HPlus, opts.max_states);
        TopologyReport topo = topology_report(space);
        inst.states = space.size();
        inst.solvable = space.gd[0].is_finite();
        inst.dead_ends = topo.dead_ends;
        inst.local_minima = topo.count(PlateauClass::LocalMinimum);
        inst.mlmed = topo.mlmed;
        inst.mbed = topo.mbed;
        inst.hplus_equals_gd = std::equal(space.h.begin(), space.h.end(), space.gd.begin());
        inst.lemmas = check_lemmas(task);
        inst.interaction = interaction_free_verdict(task, opts.fgt_cap);
        inst.criterion = no_local_minima_criterion(task, opts.fgt_cap, opts.test);
        card.instances.push_back(std::move(inst));
    }
    check_consistency(card);
    return card;
}

void check_consistency(const TaxonomyCard &card) {
    for (const auto &i : card.instances) {
        auto fail = [&](const std::string &what) {
            throw std::logic_error("taxonomy card for " + i.spec + " contradicts " + what);
        };
        if (i.lemmas.lemma1 && i.dead_ends != DeadEndClass::Undirected)
            fail("the all-invertible verdict");
        if (i.lemmas.lemma2 && i.solvable && i.dead_ends > DeadEndClass::Harmless)
            fail("the at-least-invertible verdict");
        if (i.criterion == LocalMinimaVerdict::NoLocalMinima && (i.local_minima != 0 || i.mlmed != 0))
            fail("the no-local-minima verdict");
        if (i.interaction != InteractionVerdict::Unknown && !i.hplus_equals_gd)
            fail("the interaction-free verdict");
    }
}

std::string emit_report(const TaxonomyCard &card, ReportFormat format) {
    check_consistency(card);
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "domain,spec,size,states,dead_end_class,local_minima,mlmed,mbed,hplus_equals_gd,lemma1,lemma2,"
               "interaction,criterion\n";
        for (const auto &i : card.instances)
            out << card.domain << ',' << i.spec << ',' << i.size << ',' << i.states << ',' << to_string(i.dead_ends)
                << ',' << i.local_minima << ',' << i.mlmed.str() << ',' << i.mbed.str() << ','
                << yes_no(i.hplus_equals_gd) << ',' << yes_no(i.lemmas.lemma1) << ',' << yes_no(i.lemmas.lemma2)
                << ',' << to_string(i.interaction) << ',' << to_string(i.criterion) << '\n';
        return out.str();
    }

    const std::size_t n = card.instances.size();
    out << "taxonomy card: " << card.domain << '\n';
    out << "instances examined: " << n;
    if (n)
        out << " (" << card.size_param << " " << card.instances.front().size << ".." << card.instances.back().size
            << ")";
    out << '\n';
    if (!n) {
        out << "nothing observed\n";
        return out.str();
    }

    auto all = [&](auto pred) { return count_if(card, pred) == n; };
    const bool l1 = all([](const auto &i) { return i.lemmas.lemma1; });
    const bool l2 = all([](const auto &i) { return i.lemmas.lemma2; });
    const bool nlm = all([](const auto &i) { return i.criterion == LocalMinimaVerdict::NoLocalMinima; });
    const bool free = all([](const auto &i) { return i.interaction != InteractionVerdict::Unknown; });

    out << "dead-end class: " << to_string(*card.dead_ends());
    if (l1)
        out << " (proved: every action invertible)";
    else if (l2 && *card.dead_ends() <= DeadEndClass::Harmless)
        out << " (observed worst; at most harmless proved: every action at least invertible or static)";
    else
        out << " (observed worst)";
    out << '\n';
    out << "mlmed: " << card.mlmed().str() << (nlm ? " (proved: no local minima)" : " (observed maximum)") << '\n';
    out << "mbed: " << card.mbed().str() << " (observed maximum)\n";
    out << "h+ = gd: " << yes_no(card.hplus_equals_gd())
        << (free ? " (proved: interaction-free)" : " (observed on every reachable state)") << '\n';
    out << "static verdicts:\n";
    out << "  all actions invertible: " << fraction(count_if(card, [](const auto &i) { return i.lemmas.lemma1; }), n)
        << '\n';
    out << "  at least invertible or static: "
        << fraction(count_if(card, [](const auto &i) { return i.lemmas.lemma2; }), n) << '\n';
    out << "  interaction-free: "
        << fraction(count_if(card, [](const auto &i) { return i.interaction != InteractionVerdict::Unknown; }), n)
        << '\n';
    out << "  no-local-minima criterion: "
        << fraction(count_if(card, [](const auto &i) { return i.criterion == LocalMinimaVerdict::NoLocalMinima; }), n)
        << '\n';
    out << "instances:\n";
    for (const auto &i : card.instances)
        out << "  " << i.spec << ": states=" << i.states << " dead-ends=" << to_string(i.dead_ends)
            << " mlmed=" << i.mlmed.str() << " mbed=" << i.mbed.str() << " h+=gd=" << yes_no(i.hplus_equals_gd)
            << " interaction=" << to_string(i.interaction) << " criterion=" << to_string(i.criterion) << '\n';
    return out.str();
}

} // namespace relaxlab
