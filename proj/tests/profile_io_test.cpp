#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spineless/families.hpp"
#include "spineless/profile_io.hpp"
#include "spineless/surgery.hpp"

using namespace spineless;

TEST(ProfileIo, LabelledRoundTrip) {
  const std::string text = "n 4\n0 -5/4\n1 0\n2 -1/4\n3 0\nv: 1,0\n";
  const ProfileDocument doc = read_profile(text);
  EXPECT_FALSE(doc.is_raw());
  EXPECT_EQ(doc.order(), 4);
  EXPECT_EQ(std::get<DProfile>(doc.profile), niwu_profile(v_trefoil(), 4));
  ASSERT_TRUE(doc.v.has_value());
  EXPECT_EQ(doc.v->str(), "1,0");
  EXPECT_EQ(write_profile(doc), text);
}

TEST(ProfileIo, BareHeaderCommentsAndOrder) {
  const ProfileDocument doc = read_profile("# L(2,1)\n2\n\n1 -1/4   # s_1\n0 1/4\n");
  EXPECT_EQ(write_profile(doc), "n 2\n0 1/4\n1 -1/4\n");
}

TEST(ProfileIo, RawRoundTrip) {
  const std::string text = "n 4\na -1/4\nb -5/4\nc 0\nd 0\nconj a a\nconj b b\nconj c d\n";
  const ProfileDocument doc = read_profile(text);
  ASSERT_TRUE(doc.is_raw());
  EXPECT_EQ(std::get<RawProfile>(doc.profile).sorted_values(), qm_profile(-3).sorted_values());
  EXPECT_EQ(write_profile(doc), text);
}

TEST(ProfileIo, CyclicRoundTrip) {
  const std::string text = "n 3\nu -1/6\nw -1/6\nz 1/2\nconj u w\nconj z z\ncyclic u 1\ncyclic w 2\ncyclic z 0\n";
  const ProfileDocument doc = read_profile(text);
  ASSERT_TRUE(doc.is_raw());
  EXPECT_TRUE(std::get<RawProfile>(doc.profile).is_cyclic());
  EXPECT_EQ(write_profile(doc), text);
  EXPECT_THROW(read_profile("n 3\nu -1/6\nw -1/6\nz 1/2\nconj u w\nconj z z\ncyclic u 1\ncyclic w 1\ncyclic z 0\n"),
               ParseError);
}

TEST(ProfileIo, ErrorsCarryLineNumbers) {
  try {
    read_profile("n 3\n0 1\n1 x/2\n2 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(read_profile(""), ParseError);
  EXPECT_THROW(read_profile("n 0\n"), ParseError);
  EXPECT_THROW(read_profile("n 2\n0 1\n"), ParseError);
  EXPECT_THROW(read_profile("n 2\n0 1\n0 1\n"), ParseError);
  EXPECT_THROW(read_profile("n 2\n0 1\n2 1\n"), ParseError);
  EXPECT_THROW(read_profile("n 3\n0 1\n1 0\n2 5\n"), ParseError);  // asymmetric
  EXPECT_THROW(read_profile("n 2\na 1\nb 1\nconj a a\n"), ParseError);  // b has no conj
  EXPECT_THROW(read_profile("n 1\n0 0\nv: 2\n"), ParseError);
  EXPECT_THROW(read_profile("n 1\n0 0\ncyclic 0 0\n"), ParseError);
}

TEST(ProfileIo, IntLists) {
  EXPECT_EQ(parse_int_list("1,0"), (std::vector<long>{1, 0}));
  EXPECT_EQ(parse_int_list(" -4, -2 ,0"), (std::vector<long>{-4, -2, 0}));
  EXPECT_THROW(parse_int_list("1,,2"), InvalidInput);
  EXPECT_THROW(parse_int_list("1.5"), InvalidInput);
  EXPECT_EQ(join_ints({3, -1}), "3,-1");
}

TEST(ProfileIo, RandomSurgeryDocumentsRoundTrip) {
  std::mt19937 rng(31);
  for (int k = 0; k < 100; ++k) {
    const VSequence v = v_from_values(oracle::random_v(rng, 8));
    const ProfileDocument doc{niwu_profile(v, 1 + k % 16), v};
    const std::string text = write_profile(doc);
    EXPECT_EQ(write_profile(read_profile(text)), text);
  }
}
