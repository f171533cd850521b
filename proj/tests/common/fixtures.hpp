#pragma once

#include "bgaug/rng.hpp"

#include <fmt/format.h>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace bgaug::testing {

struct FixtureVideo {
    std::vector<cv::Mat> frames; // BGR, 8-bit
    std::vector<cv::Mat> gt;     // gray levels
    cv::Mat roi;
};

inline void must_write(const std::filesystem::path& p, const cv::Mat& m) {
    if (!cv::imwrite(p.string(), m)) throw std::runtime_error("imwrite failed: " + p.string());
}

// Noisy background with a square moving right by one pixel per frame.
// Ground truth: 255 on the square, exactly one 50 (shadow) pixel below it,
// 170 (unknown) in the bottom-right corner, 85 (outside ROI) bottom-left.
// ROI excludes the last column.
inline FixtureVideo make_frames(std::size_t n, int h, int w, std::uint64_t seed) {
    RandomStream r(seed);
    FixtureVideo v;
    cv::Mat bg(h, w, CV_8UC3);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            bg.at<cv::Vec3b>(y, x) = cv::Vec3b(static_cast<uchar>(r.below(60)), static_cast<uchar>(80 + r.below(60)),
                                               static_cast<uchar>(160 + r.below(60)));
    const int side = std::max(2, std::min(h, w) / 4);
    for (std::size_t i = 0; i < n; ++i) {
        cv::Mat f = bg.clone();
        cv::Mat g(h, w, CV_8UC1, cv::Scalar(0));
        const int x0 = static_cast<int>(1 + i) % (w - side - 1);
        const int y0 = 1;
        for (int y = y0; y < y0 + side; ++y)
            for (int x = x0; x < x0 + side; ++x) {
                f.at<cv::Vec3b>(y, x) = cv::Vec3b(250, 250, 10);
                g.at<uchar>(y, x) = 255;
            }
        g.at<uchar>(y0 + side, x0) = 50;
        g.at<uchar>(h - 1, w - 1) = 170;
        g.at<uchar>(h - 1, 0) = 85;
        v.frames.push_back(f);
        v.gt.push_back(g);
    }
    v.roi = cv::Mat(h, w, CV_8UC1, cv::Scalar(255));
    v.roi.col(w - 1).setTo(0);
    return v;
}

inline FixtureVideo write_cdnet_video(const std::filesystem::path& root, const std::string& category,
                                      const std::string& video, std::size_t n, int h, int w, std::uint64_t seed,
                                      std::size_t roi_first = 1, std::size_t roi_last = 0) {
    const auto dir = root / category / video;
    std::filesystem::create_directories(dir / "input");
    std::filesystem::create_directories(dir / "groundtruth");
    FixtureVideo v = make_frames(n, h, w, seed);
    for (std::size_t i = 0; i < n; ++i) {
        must_write(dir / "input" / fmt::format("in{:06d}.png", i + 1), v.frames[i]);
        must_write(dir / "groundtruth" / fmt::format("gt{:06d}.png", i + 1), v.gt[i]);
    }
    must_write(dir / "ROI.bmp", v.roi);
    std::ofstream(dir / "temporalROI.txt") << roi_first << ' ' << (roi_last ? roi_last : n) << '\n';
    return v;
}

// Binary ground truth (0 / 255).
inline FixtureVideo write_lasiesta_video(const std::filesystem::path& root, const std::string& category,
                                         const std::string& video, std::size_t n, int h, int w, std::uint64_t seed) {
    const auto dir = root / category / video;
    const auto gt_dir = root / category / (video + "-GT");
    std::filesystem::create_directories(dir);
    std::filesystem::create_directories(gt_dir);
    FixtureVideo v = make_frames(n, h, w, seed);
    for (std::size_t i = 0; i < n; ++i) {
        cv::Mat g = v.gt[i].clone();
        g.setTo(0, g != 255);
        v.gt[i] = g;
        must_write(dir / fmt::format("{}-{}.bmp", video, i + 1), v.frames[i]);
        must_write(gt_dir / fmt::format("{}-GT_{}.png", video, i + 1), g);
    }
    return v;
}

} // namespace bgaug::testing
