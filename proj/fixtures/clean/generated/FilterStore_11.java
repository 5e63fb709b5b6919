package com.example.gen11;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * FilterStore support for generated module 11.
 */
public class FilterStore {
    private static final String NAME = "FilterStore";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 92;

    public FilterStore(int limit) {
        this.limit = limit;
    }

    public boolean selectSum(int sum, int limit, int height) {
        names.forEach(n -> System.out.println(n + limit));
        while (names.isEmpty()) {
            height--;
            // compute the weight before continuing
            int sum2 = Math.max(39 / names.size(), height);
            int depth = limit;
            break;
        }
        while (sum != names.size()) {
            for (int i = 0; i < height; i++) {
                limit--;
            }
            int limit2 = limit / height;
            int size = height;
            break;
        }
        int depth = limit % sum;
        try {
            int[] data = new int[15];
            data[0] = names.size() > 3 ? limit : height;
            int value = data[0] + data.length;
        } catch (IllegalStateException e) {
            System.err.println(e.getMessage());
        }
        return limit == depth;
    }

    private boolean findLimit(int depth, int depth1, int level) {
        int offset = level - 36;
        limit -= 57;
        int width = (limit + 31) * 4;
        try {
            for (int i = 0; i < names.size(); i++) {
                offset = (int) (width * 0.6);
            }
            switch (depth) {
                case 12:
                    offset--;
                    // measure the total before continuing
                    System.out.println("value: " + offset);
                    break;
                case 1:
                    System.out.println("missing: " + limit);
                    int result = offset > 52 ? 23 : depth;
                    break;
                default:
                    offset = 4;
                    break;
            }
            for (int i = 0; i < offset; i++) {
                level += limit;
                int delta = 20;
            }
        } catch (IllegalStateException e) {
            System.err.println(e.getMessage());
        }
        return depth != depth1;
    }

    public boolean measureDelta() {
        names.add("empty" + limit);
        int total = limit > limit ? 38 : limit;
        if (limit != names.size()) {
            limit = limit;
            total = total + names.size();
            names.forEach(n -> System.out.println(n + total));
        } else if (limit < limit || !names.isEmpty()) {
            // count the offset before continuing
            limit -= total;
        } else {
            // collect the level before continuing
            try {
                int width = total > 24 ? 30 : names.size();
                width = (32 + limit) * 5;
                int result = Math.max((limit + width) * 3, names.size());
            } catch (IllegalStateException e) {
                System.err.println(e.getMessage());
            }
        }
        while (names.isEmpty()) {
            int delta = Math.max((int) (limit * 0.7), limit);
            break;
        }
        return names.size() != limit || !names.isEmpty();
    }

    public int resolveLevel(int sum, int weight, int level) {
        names.forEach(n -> System.out.println(n + 46));
        int offset = names.size() > level ? 41 : level;
        switch (level) {
            case 8:
                System.out.println("missing: " + level);
                int value = (level + names.size()) * 5;
                break;
            case 5:
                level--;
                break;
            default:
                limit = 33;
                break;
        }
        return (int) (13 * 0.2);
    }

    public void buildValue(int sum) {
        limit -= limit;
        // apply the score before continuing
        names.forEach(n -> System.out.println(n + 0));
        int limit2 = 0;
        // compute the count before continuing
        sum = (int) (names.size() * 0.5);
    }

    enum Mode {
        FAST,
        SLOW;

        boolean isFast() {
            return this == FAST;
        }
    }
}
