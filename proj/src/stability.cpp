#include "stabreg/stability.hpp"

#include "stabreg/errors.hpp"

namespace stabreg {

namespace {

class LadderSearch {
public:
    LadderSearch(const Relation& r, std::size_t k, LadderOptions options)
        : r_(r), k_(k), options_(options) {
        ladder_.vs.reserve(k);
        ladder_.ws.reserve(k);
    }

    std::optional<Ladder> run() {
        VertexSet used(options_.distinct_witnesses ? r_.rows() : 0);
        if (pick_v(VertexSet::full(r_.rows()), VertexSet::full(r_.cols()), used)) {
            return ladder_;
        }
        return std::nullopt;
    }

private:
    // v_i must avoid every chosen w; w_i must be related to every chosen v.
    bool pick_v(const VertexSet& v_candidates, const VertexSet& w_candidates, VertexSet& used) {
        bool found = false;
        v_candidates.for_each([&](std::size_t v) {
            if (found || (options_.distinct_witnesses && used.contains(v))) return;
            VertexSet next_w = w_candidates & r_.row(v);
            if (next_w.empty()) return;
            ladder_.vs.push_back(v);
            if (options_.distinct_witnesses) used.insert(v);
            found = pick_w(v_candidates, next_w, used);
            if (!found) {
                ladder_.vs.pop_back();
                if (options_.distinct_witnesses) used.erase(v);
            }
        });
        return found;
    }

    bool pick_w(const VertexSet& v_candidates, const VertexSet& w_candidates, VertexSet& used) {
        bool found = false;
        w_candidates.for_each([&](std::size_t w) {
            if (found || (options_.distinct_witnesses && used.contains(w))) return;
            ladder_.ws.push_back(w);
            if (ladder_.ws.size() == k_) {
                found = true;
                return;
            }
            if (options_.distinct_witnesses) used.insert(w);
            found = pick_v(v_candidates - r_.column(w), w_candidates, used);
            if (!found) {
                ladder_.ws.pop_back();
                if (options_.distinct_witnesses) used.erase(w);
            }
        });
        return found;
    }

    const Relation& r_;
    std::size_t k_;
    LadderOptions options_;
    Ladder ladder_;
};

void check_distinct_allowed(const Relation& r, LadderOptions options) {
    if (options.distinct_witnesses && r.rows() != r.cols()) {
        throw InputError("distinct witnesses need both sides over one index set");
    }
}

}  // namespace

bool is_ladder(const Relation& r, const Ladder& ladder, LadderOptions options) {
    const std::size_t k = ladder.vs.size();
    if (ladder.ws.size() != k) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (ladder.vs[i] >= r.rows() || ladder.ws[i] >= r.cols()) return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (r.holds(ladder.vs[i], ladder.ws[j]) != (i <= j)) return false;
        }
    }
    if (options.distinct_witnesses) {
        std::vector<std::size_t> all = ladder.vs;
        all.insert(all.end(), ladder.ws.begin(), ladder.ws.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (all[i] == all[j]) return false;
    }
    return true;
}

std::optional<Ladder> find_ladder(const Relation& r, std::size_t k, LadderOptions options) {
    if (k == 0) {
        throw InputError("ladder length must be at least 1");
    }
    check_distinct_allowed(r, options);
    return LadderSearch(r, k, options).run();
}

std::optional<Ladder> find_ladder(const Graph& g, std::size_t k, LadderOptions options) {
    return find_ladder(g.relation(), k, options);
}

LadderIndex ladder_index_report(const Relation& r, std::size_t cap, LadderOptions options) {
    if (cap == 0) {
        throw InputError("ladder index cap must be at least 1");
    }
    LadderIndex result;
    // A ladder of length k+1 restricts to one of length k, so the first
    // failure ends the scan.
    for (std::size_t k = 1; k <= cap; ++k) {
        auto ladder = find_ladder(r, k, options);
        if (!ladder) return result;
        result.index = k;
        result.witness = std::move(ladder);
    }
    result.capped = true;
    return result;
}

std::size_t ladder_index(const Relation& r, std::size_t cap, LadderOptions options) {
    return ladder_index_report(r, cap, options).index;
}

std::size_t ladder_index(const Graph& g, std::size_t cap, LadderOptions options) {
    return ladder_index(g.relation(), cap, options);
}

bool is_k_stable(const Relation& r, std::size_t k, LadderOptions options) {
    return !find_ladder(r, k, options).has_value();
}

bool is_k_stable(const Graph& g, std::size_t k, LadderOptions options) {
    return is_k_stable(g.relation(), k, options);
}

}  // namespace stabreg
