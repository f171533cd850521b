#include "cli.hpp"

#include "bgaug/background.hpp"
#include "bgaug/bench.hpp"
#include "bgaug/config.hpp"
#include "bgaug/dataset.hpp"
#include "bgaug/error.hpp"
#include "bgaug/metrics.hpp"
#include "bgaug/pipeline.hpp"
#include "bgaug/report_io.hpp"
#include "bgaug/split.hpp"
#include "bgaug/synthetic.hpp"
#include "bgaug/tensor_io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

namespace fs = std::filesystem;

namespace bgaug::cli {

namespace {

constexpr const char* kDatasetEnv = "BGAUG_DATASET_ROOT";

struct Resolution {
    std::size_t width = 0;
    std::size_t height = 0;
};

Resolution parse_resolution(const std::string& s) {
    const auto x = s.find_first_of("xX");
    try {
        if (x == std::string::npos) throw std::invalid_argument(s);
        std::size_t used = 0;
        const auto w = std::stoul(s.substr(0, x), &used);
        if (used != x) throw std::invalid_argument(s);
        const auto h = std::stoul(s.substr(x + 1), &used);
        if (used != s.size() - x - 1 || w == 0 || h == 0) throw std::invalid_argument(s);
        return {w, h};
    } catch (const std::exception&) {
        throw CLI::ValidationError("resolution", "expected WIDTHxHEIGHT, got '" + s + "'");
    }
}

const CLI::Validator kResolutionCheck(
    [](std::string& s) {
        try {
            parse_resolution(s);
        } catch (const CLI::ValidationError& e) {
            return std::string(e.what());
        }
        return std::string();
    },
    "WxH", "resolution");

// Runs fn(i) for i in [0, n) on up to `workers` threads; rethrows the first failure.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = n;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

void ensure_dir(const fs::path& p) {
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec || !fs::is_directory(p)) throw Error(ErrorCode::Io, "cannot create directory " + p.string());
}

std::ofstream open_out(const fs::path& p) {
    if (p.has_parent_path()) ensure_dir(p.parent_path());
    std::ofstream out(p, std::ios::trunc | std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot create " + p.string());
    return out;
}

AugmentationConfig config_or_default(const std::string& path) {
    return path.empty() ? AugmentationConfig{} : load_config(path);
}

// ---------------------------------------------------------------- split

struct SplitArgs {
    std::string out;
};

void cmd_split(const SplitArgs& a, std::ostream& out) {
    const SplitManifest m = builtin_split();
    const fs::path manifest_path(a.out);
    {
        auto f = open_out(manifest_path);
        f << "category,video,fold\n";
        for (const auto& e : m.entries) f << e.category << ',' << e.video << ',' << to_string(e.fold) << '\n';
    }
    const fs::path dir = manifest_path.has_parent_path() ? manifest_path.parent_path() : fs::path(".");
    for (Fold fold : {Fold::S1, Fold::S2, Fold::S3, Fold::S4}) {
        const FoldPlan plan = fold_plan(m, fold);
        auto write_list = [&](const std::vector<SplitEntry>& entries, const char* suffix) {
            auto f = open_out(dir / fmt::format("{}_{}.txt", to_string(fold), suffix));
            for (const auto& e : entries) f << e.category << '/' << e.video << '\n';
        };
        write_list(plan.test, "test");
        write_list(plan.train, "train");
    }
    out << fmt::format("wrote {} videos to {}\n", m.entries.size(), manifest_path.string());
}

// ---------------------------------------------------------------- bgmodel

struct BgmodelArgs {
    std::string video;
    std::string layout = "auto";
    std::size_t window = kRecentWindow;
    std::string strategy;
    std::size_t empty_frame = 1;
    std::string out;
};

VideoSource open_video(fs::path dir, const std::string& layout) {
    dir = dir.lexically_normal();
    if (!dir.has_filename()) dir = dir.parent_path();
    const bool cdnet = layout == "cdnet" || (layout == "auto" && fs::is_directory(dir / "input"));
    const fs::path root = dir.parent_path().parent_path();
    const std::string category = dir.parent_path().filename().string();
    const std::string video = dir.filename().string();
    return cdnet ? load_cdnet_video(root, category, video) : load_lasiesta_video(root, category, video);
}

void cmd_bgmodel(const BgmodelArgs& a, std::ostream& out) {
    const VideoSource src = open_video(a.video, a.layout);
    const VideoDescriptor& d = src.descriptor();

    EmptyBackgroundStrategy strategy = d.empty_background;
    if (a.strategy == "median") strategy = GlobalMedian{};
    if (a.strategy == "manual") {
        if (a.empty_frame < 1 || a.empty_frame > d.frame_count)
            throw Error(ErrorCode::FrameIdOutOfRange,
                        fmt::format("empty frame {} outside 1..{}", a.empty_frame, d.frame_count));
        strategy = ManualFrame{a.empty_frame - 1};
    }

    const fs::path out_dir(a.out);
    ensure_dir(out_dir / "recent");
    MedianWindow window(d.height, d.width, 3, a.window);
    RunningMedian global(d.height, d.width, 3);
    const auto* manual = std::get_if<ManualFrame>(&strategy);
    MultiChannelImage previous;
    for (std::size_t i = 0; i < d.frame_count; ++i) {
        MultiChannelImage frame = src.frame(i);
        // The first frame has no history; it stands in for its own background.
        const MultiChannelImage& recent = i == 0 ? frame : window.push(previous);
        write_image(out_dir / "recent" / fmt::format("recent{:06d}.png", i + 1), recent);
        if (manual && manual->frame_id == i) write_image(out_dir / "empty.png", frame);
        if (!manual) global.push(frame);
        previous = std::move(frame);
    }
    if (!manual) write_image(out_dir / "empty.png", global.result());
    out << fmt::format("{}/{}: {} recent backgrounds (window {}), empty background from {}\n", d.category, d.name,
                       d.frame_count, a.window,
                       manual ? fmt::format("frame {}", manual->frame_id + 1) : std::string("median of all frames"));
}

// ---------------------------------------------------------------- augment

struct AugmentArgs {
    std::string config;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::string out;
    unsigned workers = 1;
    std::vector<std::string> inputs;
    std::vector<std::string> donors;
    std::string source_size = "320x240";
};

void cmd_augment(const AugmentArgs& a, std::ostream& out) {
    const AugmentationConfig cfg = config_or_default(a.config);
    const Resolution size = parse_resolution(a.source_size);

    std::vector<SampleTriplet> sources;
    for (const auto& p : a.inputs) sources.push_back(read_triplet_tensor(p));
    if (sources.empty()) sources.push_back(synthetic_triplet(size.height, size.width, 4, 0));
    std::vector<SampleTriplet> donors;
    for (const auto& p : a.donors) donors.push_back(read_triplet_tensor(p));
    if (donors.empty() && cfg.ioa_probability > 0.0)
        for (std::uint64_t v = 1; v <= 4; ++v) donors.push_back(synthetic_triplet(size.height, size.width, 4, v));

    std::vector<const SampleTriplet*> source_ptrs, donor_ptrs;
    for (const auto& s : sources) source_ptrs.push_back(&s);
    for (const auto& s : donors) donor_ptrs.push_back(&s);

    const fs::path dir(a.out);
    ensure_dir(dir);
    auto log = open_out(dir / "plan_log.csv");
    log << plan_log_header() << '\n';

    const std::size_t chunk = std::max<std::size_t>(16, 8 * static_cast<std::size_t>(a.workers));
    for (std::size_t first = 0; first < a.count; first += chunk) {
        const std::size_t n = std::min(chunk, a.count - first);
        const auto batch = make_batch(source_ptrs, donor_ptrs, cfg, a.seed, n, a.workers, first);
        for (std::size_t k = 0; k < batch.size(); ++k) {
            write_tensor(dir / fmt::format("sample_{:06d}.bsvt", first + k), batch[k].triplet);
            log << plan_log_row(first + k, batch[k]) << '\n';
        }
    }
    if (!log) throw Error(ErrorCode::Io, "short write to the plan log");
    out << fmt::format("wrote {} samples to {}\n", a.count, dir.string());
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
    std::string pred;
    std::string dataset;
    std::string layout = "cdnet";
    std::string scope = "video";
    std::string out;
    std::string json;
    std::string fold;
    unsigned workers = 1;
};

std::vector<std::pair<std::string, std::string>> list_videos(const fs::path& root, const std::string& layout,
                                                             const std::string& fold) {
    std::vector<std::pair<std::string, std::string>> videos;
    if (!fold.empty()) {
        for (const auto& e : fold_plan(builtin_split(), fold).test) videos.emplace_back(e.category, e.video);
        return videos;
    }
    if (!fs::is_directory(root)) throw Error(ErrorCode::MissingDirectory, "missing dataset root " + root.string());
    for (const auto& cat : fs::directory_iterator(root)) {
        if (!cat.is_directory()) continue;
        for (const auto& vid : fs::directory_iterator(cat.path())) {
            if (!vid.is_directory()) continue;
            const std::string name = vid.path().filename().string();
            const bool is_video = layout == "cdnet" ? fs::is_directory(vid.path() / "input")
                                                    : !(name.size() > 3 && name.ends_with("-GT"));
            if (is_video) videos.emplace_back(cat.path().filename().string(), name);
        }
    }
    std::sort(videos.begin(), videos.end());
    if (videos.empty()) throw Error(ErrorCode::MissingDirectory, "no videos under " + root.string());
    return videos;
}

MetricsReport evaluate_video(const VideoSource& src, const fs::path& pred_dir) {
    const VideoDescriptor& d = src.descriptor();
    const ForegroundMask roi = src.roi();
    ConfusionCounts counts;
    for (std::size_t i = 0; i < d.frame_count; ++i) {
        if (!src.evaluated(i)) continue;
        const fs::path p = pred_dir / fmt::format("bin{:06d}.png", i + 1);
        std::size_t h = 0, w = 0;
        auto gray = read_gray_image(p, h, w);
        if (h != d.height || w != d.width)
            throw Error(ErrorCode::DimensionMismatch,
                        fmt::format("{} is {}x{}, video is {}x{}", p.string(), w, h, d.width, d.height));
        for (auto& v : gray) v = v != 0;
        counts += accumulate_confusion(ForegroundMask(h, w, std::move(gray)), src.groundtruth(i), roi);
    }
    MetricsReport r = compute_metrics(counts);
    r.category = d.category;
    r.video = d.name;
    return r;
}

void cmd_eval(const EvalArgs& a, std::ostream& out) {
    std::string root = a.dataset;
    if (root.empty())
        if (const char* env = std::getenv(kDatasetEnv)) root = env;
    if (root.empty()) throw CLI::RequiredError(fmt::format("--dataset (or {})", kDatasetEnv));
    const Scope scope = parse_scope(a.scope);

    const auto videos = list_videos(root, a.layout, a.fold);
    std::vector<MetricsReport> reports(videos.size());
    parallel_for(videos.size(), a.workers, [&](std::size_t i) {
        const auto& [category, video] = videos[i];
        const VideoSource src = a.layout == "cdnet" ? load_cdnet_video(root, category, video)
                                                    : load_lasiesta_video(root, category, video);
        reports[i] = evaluate_video(src, fs::path(a.pred) / category / video);
    });

    const ReportTree tree = aggregate(reports);
    {
        auto f = open_out(a.out);
        write_report_csv(f, tree, scope);
    }
    if (!a.json.empty()) open_out(a.json) << report_json(tree, scope) << '\n';
    out << fmt::format("{} videos, {} categories: re {:.4f} sp {:.4f} pwc {:.4f} pr {:.4f} f1 {:.4f}\n", videos.size(),
                       tree.categories.size(), tree.overall.re, tree.overall.sp, tree.overall.pwc, tree.overall.pr,
                       tree.overall.f1);
}

// ---------------------------------------------------------------- rank

struct RankArgs {
    std::vector<std::string> reports;
    std::string out;
};

void cmd_rank(const RankArgs& a, std::ostream& out) {
    std::vector<MethodResults> methods;
    for (const auto& p : a.reports) methods.push_back(method_results(fs::path(p).stem().string(), read_report_csv(p)));
    const RankingTable table = rank_methods(methods);
    if (!a.out.empty()) {
        auto f = open_out(a.out);
        write_ranking_csv(f, table);
    }
    write_ranking_csv(out, table);
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::string config;
    std::vector<std::string> resolutions{"320x240"};
    double seconds = 1.0;
    std::uint64_t seed = 0;
};

void cmd_bench(const BenchArgs& a, std::ostream& out) {
    const AugmentationConfig cfg = config_or_default(a.config);
    for (const auto& r : a.resolutions) {
        const Resolution res = parse_resolution(r);
        const BenchResult b = run_bench(cfg, res.height, res.width, a.seconds, a.seed);
        out << fmt::format("{}x{}: {} triplets in {:.3f} s, {:.1f} triplets/s\n", res.width, res.height, b.triplets,
                           b.seconds, b.triplets_per_second());
        for (BenchStage s : kBenchStages) {
            const double total = b.stage_seconds[static_cast<std::size_t>(s)];
            const double per = b.triplets ? 1e3 * total / static_cast<double>(b.triplets) : 0.0;
            out << fmt::format("  {:<13}{:9.3f} ms/triplet\n", to_string(s), per);
        }
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Background-subtraction training-data augmentation and evaluation", "bgaug");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    SplitArgs split;
    auto* s_split = app.add_subcommand("split", "Write the four-fold manifest and per-fold train/test lists");
    s_split->add_option("--out", split.out, "Manifest CSV; fold lists go next to it")->required();

    BgmodelArgs bg;
    auto* s_bg = app.add_subcommand("bgmodel", "Recent (sliding median) and empty backgrounds for one video");
    s_bg->add_option("--video", bg.video, "Video directory")->required();
    s_bg->add_option("--layout", bg.layout, "Directory layout")->check(CLI::IsMember({"auto", "cdnet", "lasiesta"}));
    s_bg->add_option("--window", bg.window, "Recent-background window in frames")->check(CLI::Range(1, 255));
    s_bg->add_option("--strategy", bg.strategy, "Empty background: median of all frames or a manual frame "
                                                "(default: manual for CDNet, median for LASIESTA)")
        ->check(CLI::IsMember({"median", "manual"}));
    s_bg->add_option("--empty-frame", bg.empty_frame, "1-based frame used by --strategy manual");
    s_bg->add_option("--out", bg.out, "Output directory")->required();

    AugmentArgs aug;
    auto* s_aug = app.add_subcommand("augment", "Write augmented triplets (BSVT) and a plan log");
    s_aug->add_option("--config", aug.config, "YAML augmentation config (defaults when omitted)")
        ->check(CLI::ExistingFile);
    s_aug->add_option("--seed", aug.seed, "Master seed")->required();
    s_aug->add_option("--count", aug.count, "Number of samples");
    s_aug->add_option("--out", aug.out, "Output directory")->required();
    s_aug->add_option("--workers", aug.workers, "Worker threads (output does not depend on it)")
        ->check(CLI::Range(1u, 256u));
    s_aug->add_option("--input", aug.inputs, "Source triplet files (BSVT); a synthetic scene when omitted")
        ->check(CLI::ExistingFile);
    s_aug->add_option("--donors", aug.donors, "Donor triplet files for object addition")->check(CLI::ExistingFile);
    s_aug->add_option("--source-size", aug.source_size, "Synthetic source size")->check(kResolutionCheck);

    EvalArgs ev;
    auto* s_eval = app.add_subcommand("eval", "Score binary predictions against ground truth");
    s_eval->add_option("--pred", ev.pred, "Prediction root: <category>/<video>/binNNNNNN.png")->required();
    s_eval->add_option("--dataset", ev.dataset, std::string("Dataset root (default: $") + kDatasetEnv + ")");
    s_eval->add_option("--layout", ev.layout, "Dataset layout")->check(CLI::IsMember({"cdnet", "lasiesta"}));
    s_eval->add_option("--scope", ev.scope, "Finest level written")
        ->check(CLI::IsMember({"video", "category", "overall"}));
    s_eval->add_option("--out", ev.out, "Report CSV")->required();
    s_eval->add_option("--json", ev.json, "Also write the report as JSON");
    s_eval->add_option("--fold", ev.fold, "Only the test videos of this fold (S1..S4)")
        ->check(CLI::IsMember({"S1", "S2", "S3", "S4"}));
    s_eval->add_option("--workers", ev.workers, "Videos scored in parallel")->check(CLI::Range(1u, 256u));

    RankArgs rk;
    auto* s_rank = app.add_subcommand("rank", "Rank methods by their report CSVs");
    s_rank->add_option("--reports", rk.reports, "Report CSVs, one per method (named by file stem)")
        ->required()
        ->check(CLI::ExistingFile);
    s_rank->add_option("--out", rk.out, "Ranking CSV");

    BenchArgs bn;
    auto* s_bench = app.add_subcommand("bench", "Single-threaded augmentation throughput");
    s_bench->add_option("--config", bn.config, "YAML augmentation config")->check(CLI::ExistingFile);
    s_bench->add_option("--resolution", bn.resolutions, "Source size, repeatable")->check(kResolutionCheck);
    s_bench->add_option("--seconds", bn.seconds, "Time budget per resolution")->check(CLI::NonNegativeNumber);
    s_bench->add_option("--seed", bn.seed, "Seed for the sampled plans");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (*s_split) cmd_split(split, out);
        else if (*s_bg) cmd_bgmodel(bg, out);
        else if (*s_aug) cmd_augment(aug, out);
        else if (*s_eval) cmd_eval(ev, out);
        else if (*s_rank) cmd_rank(rk, out);
        else if (*s_bench) cmd_bench(bn, out);
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitOk;
}

} // namespace bgaug::cli
