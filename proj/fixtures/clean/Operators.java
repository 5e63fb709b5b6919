package fixtures.lexical;

import java.util.function.IntBinaryOperator;

public class Operators {
    int mix(int a, int b) {
        int r = a + b - a * b / (b == 0 ? 1 : b) % 7;
        r += a; r -= b; r *= 2; r /= 3; r %= 5;
        r &= 0xF; r |= 1; r ^= 2; r <<= 1; r >>= 1; r >>>= 1;
        r = ~r << 2 >> 1 >>> 3;
        boolean x = a < b && b <= a || a > b && b >= a || a != b;
        x = !x ^ x & x | x;
        r = x ? ++a : --b;
        r = a++ + b--;
        IntBinaryOperator op = (p, q) -> p - q;
        IntBinaryOperator ref = Integer::sum;
        return r + op.applyAsInt(a, b) + ref.applyAsInt(1, 2);
    }

    void varargs(String... parts) {
        Object o = parts;
        if (o instanceof String[] arr && arr.length > 0) {
            assert arr[0] != null : "first part";
        }
    }
}
