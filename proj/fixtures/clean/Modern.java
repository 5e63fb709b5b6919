package fixtures.lexical;

import java.util.List;
import java.util.Map;

public sealed interface Modern permits Modern.Point, Modern.Empty {
    record Point(int x, int y) implements Modern {
        Point {
            if (x < 0) {
                throw new IllegalArgumentException("x");
            }
        }
    }

    final class Empty implements Modern {
    }

    static String describe(Object o) {
        return switch (o) {
            case Point p when p.x() > 0 -> "right";
            case Point p -> "left";
            default -> {
                var list = List.of(1, 2, 3);
                yield "other " + list.size();
            }
        };
    }

    static <K, V extends Comparable<? super V>> Map<K, V> identity(Map<K, V> m) {
        return m;
    }
}
