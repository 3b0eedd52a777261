#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "kgwave/io.hpp"

using namespace kgwave;

TEST(Io, PartialParamsKeepPreset)
{
    const auto p = io::params_from_json(io::json::parse(R"({"mu": 0.2, "c1": 2.5})"));
    EXPECT_EQ(p.mu, 0.2);
    EXPECT_EQ(p.c1, 2.5);
    EXPECT_EQ(p.c2, default_preset().c2);
}

TEST(Io, UnknownKeyIsNamed)
{
    try {
        io::params_from_json(io::json::parse(R"({"c1": 2.0, "speed": 1.0})"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
        EXPECT_NE(std::string(e.what()).find("'speed'"), std::string::npos);
    }
}

TEST(Io, NonNumericValueIsNamed)
{
    try {
        io::params_from_json(io::json::parse(R"({"omega2": "3.5"})"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("'omega2'"), std::string::npos);
    }
    EXPECT_THROW(io::params_from_json(io::json::parse("[1, 2]")), Error);
}

TEST(Io, ParamsRoundTrip)
{
    WaveguideParams p;
    p.c1 = 2.25;
    p.omega2 = 3.75;
    p.f2 = 0.125;
    const auto q = io::params_from_json(io::params_to_json(p));
    EXPECT_EQ(q.c1, p.c1);
    EXPECT_EQ(q.c2, p.c2);
    EXPECT_EQ(q.omega1, p.omega1);
    EXPECT_EQ(q.omega2, p.omega2);
    EXPECT_EQ(q.mu, p.mu);
    EXPECT_EQ(q.f1, p.f1);
    EXPECT_EQ(q.f2, p.f2);
}

TEST(Io, LoadParamsFromFile)
{
    const std::string path = ::testing::TempDir() + "kgwave_params.json";
    {
        std::ofstream out(path);
        out << R"({"mu": 0.3})";
    }
    EXPECT_EQ(io::load_params(path).mu, 0.3);
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    EXPECT_THROW(io::load_params(path), Error);
    std::remove(path.c_str());
    try {
        io::load_params(path);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Io);
    }
}

TEST(Io, NumbersRoundTripExactly)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        EXPECT_EQ(std::stod(io::num(x)), x);
    }
    EXPECT_EQ(io::num(0.1), "0.10000000000000001");
    EXPECT_EQ(io::num(2.0), "2");
}

TEST(Io, ConfigHeaderIsCommentBlock)
{
    const auto h = io::config_header(io::json{{"S", 3.0}, {"grid", "10x5"}});
    EXPECT_EQ(h, "# S: 3.0\n# grid: \"10x5\"\n");
}

TEST(Io, SvgIsSelfContained)
{
    io::Svg svg(100, 50);
    svg.rect(0, 0, 10, 10, "#fff");
    svg.text(5, 5, "a<b & c");
    svg.polyline({{0, 0}, {1, 1}}, "#000");
    const auto s = svg.str();
    EXPECT_EQ(s.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0), 0u);
    EXPECT_EQ(s.substr(s.size() - 7), "</svg>\n");
    EXPECT_NE(s.find("a&lt;b &amp; c"), std::string::npos);
    EXPECT_EQ(s.find("href"), std::string::npos);
}

TEST(Io, PanelMapsDataToPixels)
{
    const io::Svg::Panel p{10, 20, 100, 50, 0.0, 2.0, -1.0, 1.0};
    EXPECT_DOUBLE_EQ(p.px(0.0), 10.0);
    EXPECT_DOUBLE_EQ(p.px(2.0), 110.0);
    EXPECT_DOUBLE_EQ(p.py(-1.0), 70.0);
    EXPECT_DOUBLE_EQ(p.py(1.0), 20.0);
}
