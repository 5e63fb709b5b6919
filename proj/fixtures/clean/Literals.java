package fixtures.lexical;

/**
 * Every literal form the lexer distinguishes.
 */
public final class Literals {
    static final int DEC = 1_000_000;
    static final int HEX = 0xCAFE_BABE;
    static final int OCT = 0755;
    static final int BIN = 0b1010_0101;
    static final long BIG = 9_223_372_036_854_775_807L;
    static final float F1 = 1.5f;
    static final float F2 = .25F;
    static final double D1 = 6.02e23;
    static final double D2 = 1e-9d;
    static final double D3 = 0x1.8p3;
    static final double D4 = 10.;
    static final char C1 = 'a';
    static final char C2 = '\n';
    static final char C3 = '\'';
    static final char C4 = 'A';
    static final String S1 = "plain";
    static final String S2 = "escapes \" \\ \t é";
    static final String S3 = "";
    static final String BLOCK = """
        first line
          "quoted" and \""" escaped
        last line\
        """;
    static final boolean T = true;
    static final boolean F = false;
    static final Object N = null;
}
