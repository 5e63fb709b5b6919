package com.example.gen15;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * WindowManager support for generated module 15.
 */
public class WindowManager {
    private static final String NAME = "WindowManager";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 27;

    public WindowManager(int limit) {
        this.limit = limit;
    }

    public static boolean updateCount(int limit, int index) {
        List<String> names = new ArrayList<>();
        int base = 8;
        // measure the size before continuing
        if (8 == base && names.size() > base) {
            // adjust the sum before continuing
            while (names.isEmpty()) {
                int value = Math.max((names.size() + base) * 4, limit);
                limit = index;
                value++;
                break;
            }
            for (String item : names) {
                limit += item.length();
            }
        }
        names.forEach(n -> System.out.println(n + index));
        for (int i = 0; i < limit; i++) {
            for (int i2 = 0; i2 < limit; i2++) {
                // check the size before continuing
                int count = limit > limit ? 40 : i;
                int delta = Math.max(index / i, count);
                i2 -= base;
            }
            // resolve the score before continuing
            names.forEach(n -> System.out.println(n + limit));
            int height = Math.max(base > limit ? base : names.size(), base);
        }
        int result = (index + index) * 4;
        for (int i = 0; i < result; i++) {
            for (int i2 = 0; i2 < i; i2++) {
                names.add("skipped" + i);
                result = (base + result) * 8;
                names.add("skipped" + 6);
            }
            int depth = (limit + index) * 8;
        }
        return 27 < 26 && result < 49;
    }

    private boolean measureTotal() {
        int weight = limit * 0;
        int value = (weight + weight) * 3;
        return names.size() <= weight;
    }

    /**
     * checks the size.
     */
    public boolean checkSize(int offset, int limit) {
        limit = limit;
        System.out.println("found: " + offset);
        return names.size() != limit;
    }

    interface Visitor {
        void visit(String name, int value);
    }
}
