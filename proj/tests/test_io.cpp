#include <gtest/gtest.h>

#include <sstream>

#include "sd5/construction_a.hpp"
#include "sd5/io.hpp"

using namespace sd5;

namespace {

LinearCode parse_code(const std::string& text) {
    std::istringstream in(text);
    return read_code(in);
}

GramLattice parse_gram(const std::string& text) {
    std::istringstream in(text);
    return read_gram(in);
}

}  // namespace

TEST(CodeFormat, ParsesCommentsAndBlankLines) {
    const auto c = parse_code("# the (1,2) code\n\n5 2 1\n  1 2\n");
    EXPECT_EQ(c, LinearCode(FpMatrix::from_rows(5, {{1, 2}})));
}

TEST(CodeFormat, RoundTrip) {
    const auto c = random_self_dual(12, 3);
    std::ostringstream out;
    write_code(out, c);
    EXPECT_EQ(parse_code(out.str()), c);
}

TEST(CodeFormat, Errors) {
    EXPECT_THROW(parse_code(""), parse_error);
    EXPECT_THROW(parse_code("5 2\n1 2\n"), parse_error);
    EXPECT_THROW(parse_code("4 2 1\n1 2\n"), parse_error);
    EXPECT_THROW(parse_code("5 2 1\n1\n"), parse_error);
    EXPECT_THROW(parse_code("5 2 1\n1 x\n"), parse_error);
    EXPECT_THROW(parse_code("5 2 2\n1 2\n2 4\n"), parse_error);
    EXPECT_THROW(parse_code("5 2 1\n1 2\n3 4\n"), parse_error);
    EXPECT_THROW(parse_code("5 2 3\n"), parse_error);
    try {
        parse_code("5 2 1\n\n1 2 3\n");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(GramFormat, RoundTripWithProvenance) {
    const auto l = construction_a(random_self_dual(6, 2)).lattice;
    std::ostringstream out;
    write_gram(out, l);
    EXPECT_EQ(parse_gram(out.str()), l);
    const auto plain = GramLattice(l.gram());
    std::ostringstream out2;
    write_gram(out2, plain);
    EXPECT_EQ(parse_gram(out2.str()), plain);
}

TEST(GramFormat, Errors) {
    EXPECT_THROW(parse_gram("2\n1 0\n"), parse_error);
    EXPECT_THROW(parse_gram("2\n1 1\n0 1\n"), parse_error);
    EXPECT_THROW(parse_gram("1\n1\nbasis 0\n1\n"), parse_error);
    EXPECT_THROW(parse_gram("1\n1\nbasis 1\n2\n"), parse_error);
    EXPECT_THROW(parse_gram("1\n1\nbogus\n"), parse_error);
    EXPECT_THROW(parse_gram("1\n1\nbasis 1\n1\n1\n"), parse_error);
}

TEST(Fixtures, ParseAndHaveStatedParameters) {
    const std::string dir = SD5_FIXTURES;
    struct Expect {
        const char* name;
        std::size_t n, k;
        bool self_dual;
    };
    for (const auto& e : {Expect{"c21.code", 2, 1, true}, Expect{"i2_2i2.code", 4, 2, true},
                          Expect{"sd6.code", 6, 3, true}, Expect{"sd8.code", 8, 4, true},
                          Expect{"sd10.code", 10, 5, true}, Expect{"sd12_d12plus.code", 12, 6, true},
                          Expect{"d12plus_pair24.code", 24, 12, true}, Expect{"random24.code", 24, 12, true},
                          Expect{"not_self_dual24.code", 24, 12, false}}) {
        const auto c = read_code_file(dir + "/" + e.name);
        EXPECT_EQ(c.length(), e.n) << e.name;
        EXPECT_EQ(c.dimension(), e.k) << e.name;
        EXPECT_EQ(is_self_dual(c), e.self_dual) << e.name;
    }
    const auto l = read_gram_file(dir + "/d12plus_sum.gram");
    EXPECT_EQ(l, direct_sum(dn_plus(12), dn_plus(12)));
    EXPECT_THROW(read_code_file(dir + "/missing.code"), parse_error);
}
