#ifndef BSFORM_SEARCH_HPP
#define BSFORM_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bsform/euler.hpp"
#include "bsform/io_json.hpp"
#include "bsform/seed.hpp"

namespace bsform {

struct SearchBounds {
    int n_min = 2;
    int n_max = 2;
    int m_max = 1;
    int a_max = 1;
};

namespace detail {

inline void enumerate_a_vectors(int remaining, int parts, std::vector<int>& acc,
                                const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        if (remaining >= 1) {
            acc.push_back(remaining);
            emit(acc);
            acc.pop_back();
        }
        return;
    }
    for (int v = 1; v + (parts - 1) <= remaining; ++v) {
        acc.push_back(v);
        enumerate_a_vectors(remaining - v, parts - 1, acc, emit);
        acc.pop_back();
    }
}

inline void enumerate_k_vectors(int n, int parts, std::vector<int>& acc,
                                const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 0) {
        emit(acc);
        return;
    }
    for (int k = 1; k <= n - 1; ++k) {
        acc.push_back(k);
        enumerate_k_vectors(n, parts - 1, acc, emit);
        acc.pop_back();
    }
}

} // namespace detail

// Every balanced seed with n_min <= n <= n_max, 1 <= m <= m_max and
// sum(a_i) <= a_max, in lexicographic order of (n, m, k-vector, a-vector),
// each exactly once.
inline std::vector<SeedData> enumerate_seeds(const SearchBounds& bounds) {
    if (bounds.n_min < 2 || bounds.n_max < bounds.n_min || bounds.m_max < 1 || bounds.a_max < 1)
        throw std::invalid_argument("enumerate_seeds: bounds must be positive with n_min >= 2");
    std::vector<SeedData> out;
    for (int n = bounds.n_min; n <= bounds.n_max; ++n) {
        for (int m = 1; m <= bounds.m_max; ++m) {
            std::vector<int> kacc;
            detail::enumerate_k_vectors(n, m, kacc, [&](const std::vector<int>& ks) {
                int total = 0;
                for (int k : ks) total += n - k;
                if (total < m || total > bounds.a_max) return;  // needs a_i >= 1 each
                std::vector<int> aacc;
                detail::enumerate_a_vectors(total, m, aacc, [&](const std::vector<int>& as) {
                    SeedData seed;
                    seed.n = n;
                    for (int i = 0; i < m; ++i)
                        seed.blocks.push_back({ks[static_cast<std::size_t>(i)],
                                               as[static_cast<std::size_t>(i)]});
                    out.push_back(std::move(seed));
                });
            });
        }
    }
    return out;
}

inline std::vector<SeedData> enumerate_seeds(int n_min, int n_max, int m_max, int a_max) {
    return enumerate_seeds(SearchBounds{n_min, n_max, m_max, a_max});
}

struct SearchRecord {
    SeedData seed;
    int N = 0;
    int len_x = 0;
    Int C_abs;
    Factorization factors;
};

// One CSV row: n,m,blocks,N,len_x,C_abs,factors,max_prime
// blocks is a space-joined k:a list, factors a space-joined p^e list.
// max_prime is 1 for |C| = 1 and 0 for C = 0.
inline std::string record_to_csv(const SearchRecord& r) {
    std::ostringstream os;
    os << r.seed.n << ',' << r.seed.m() << ',';
    for (std::size_t i = 0; i < r.seed.blocks.size(); ++i) {
        if (i) os << ' ';
        os << r.seed.blocks[i].k << ':' << r.seed.blocks[i].a;
    }
    os << ',' << r.N << ',' << r.len_x << ',' << r.C_abs.get_str() << ',';
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        if (i) os << ' ';
        os << r.factors[i].first.get_str() << '^' << r.factors[i].second;
    }
    os << ',';
    if (r.C_abs == 0) os << 0;
    else if (r.factors.empty()) os << 1;
    else os << r.factors.back().first.get_str();
    return os.str();
}

inline constexpr const char* kCsvHeader = "n,m,blocks,N,len_x,C_abs,factors,max_prime";

struct RecordTableEntry {
    int N = 0;
    mpz_class best_prime;  // running maximum over all seeds with N' <= N
    SeedData witness;
};

struct SearchSummary {
    std::uint64_t seeds_processed = 0;
    std::uint64_t seeds_skipped = 0;  // already done before a resumed run
    bool completed = true;            // false when stop_after cut the run short
    std::vector<RecordTableEntry> table;
};

struct SearchOptions {
    int threads = 0;                   // 0: hardware concurrency
    std::uint64_t stop_after = 0;      // process at most this many seeds (0: all)
    std::string resume_checkpoint;     // path of a checkpoint to resume from
    std::uint64_t cross_check_point_cap = std::uint64_t{1} << 10;
};

namespace detail {

inline void write_checkpoint(const std::string& path, const SeedData& seed) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << seed_to_json(seed).dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

} // namespace detail

// Sweeps the seed space in enumeration order, computing |C| through both
// routes (any disagreement beyond sign aborts), factoring, and streaming
// CSV records. Workers run in parallel; a single writer emits records in
// enumeration order, so output bytes do not depend on the thread count.
// The checkpoint next to the output file records the last completed seed.
inline SearchSummary run_search(const SearchBounds& bounds, const std::string& out_csv,
                                const SearchOptions& options = {}) {
    const std::vector<SeedData> seeds = enumerate_seeds(bounds);
    SearchSummary summary;

    std::size_t start_index = 0;
    bool append = false;
    if (!options.resume_checkpoint.empty()) {
        std::ifstream in(options.resume_checkpoint);
        if (!in)
            throw std::invalid_argument("cannot open checkpoint: " + options.resume_checkpoint);
        Json j;
        try {
            in >> j;
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument("malformed checkpoint JSON: " + std::string(e.what()));
        }
        const SeedData last = seed_from_json(j);
        auto it = std::find(seeds.begin(), seeds.end(), last);
        if (it == seeds.end())
            throw std::invalid_argument("checkpoint seed not in the current enumeration: " +
                                        last.to_string());
        start_index = static_cast<std::size_t>(it - seeds.begin()) + 1;
        append = true;
    }
    summary.seeds_skipped = start_index;

    std::ofstream out(out_csv, append ? std::ios::app : std::ios::trunc);
    if (!out)
        throw std::invalid_argument("cannot open output file for writing: " + out_csv);
    if (!append)
        out << kCsvHeader << '\n';

    const std::size_t total = seeds.size();
    std::size_t end_index = total;
    if (options.stop_after > 0 && start_index + options.stop_after < total) {
        end_index = start_index + static_cast<std::size_t>(options.stop_after);
        summary.completed = false;
    }

    int nthreads = options.threads > 0 ? options.threads
                                       : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;

    std::mutex mu;
    std::condition_variable cv;
    std::map<std::size_t, SearchRecord> done;
    std::atomic<std::size_t> next{start_index};
    std::exception_ptr failure;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= end_index) return;
            try {
                const SeedData& seed = seeds[i];
                const ComputeResult res = compute_full(seed, options.cross_check_point_cap);
                SearchRecord rec;
                rec.seed = seed;
                rec.N = res.N;
                rec.len_x = res.len_x;
                rec.C_abs = abs(res.C_direct);
                rec.factors = res.factorization;
                std::lock_guard<std::mutex> lock(mu);
                done.emplace(i, std::move(rec));
                cv.notify_all();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                cv.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);

    const std::string checkpoint_path = out_csv + ".checkpoint";
    std::map<int, std::pair<mpz_class, SeedData>> per_n;  // N -> (max prime, first witness)

    {
        std::unique_lock<std::mutex> lock(mu);
        for (std::size_t i = start_index; i < end_index; ++i) {
            cv.wait(lock, [&] { return failure || done.count(i) > 0; });
            if (failure) break;
            SearchRecord rec = std::move(done.at(i));
            done.erase(i);
            lock.unlock();

            const mpz_class prime = max_prime_factor(rec.factors);
            auto it = per_n.find(rec.N);
            if (it == per_n.end())
                per_n.emplace(rec.N, std::make_pair(prime, rec.seed));
            else if (prime > it->second.first)
                it->second = {prime, rec.seed};
            out << record_to_csv(rec) << '\n';
            out.flush();
            detail::write_checkpoint(checkpoint_path, rec.seed);
            ++summary.seeds_processed;

            lock.lock();
        }
    }

    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    // Emitted table is cumulative over N, hence weakly increasing.
    mpz_class best(-1);
    SeedData witness;
    for (const auto& [N, pw] : per_n) {
        if (pw.first > best) { best = pw.first; witness = pw.second; }
        summary.table.push_back({N, best, witness});
    }
    return summary;
}

} // namespace bsform

#endif
