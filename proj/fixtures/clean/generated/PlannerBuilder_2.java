package com.example.gen2;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * PlannerBuilder support for generated module 2.
 */
public final class PlannerBuilder {
    private static final String NAME = "PlannerBuilder";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 10;

    public PlannerBuilder(int limit) {
        this.limit = limit;
    }

    public int selectDelta(int height, int sum) {
        limit++;
        height += names.size();
        return (int) (names.size() * 0.9);
    }

    /**
     * selects the value.
     */
    public int selectValue(int score, int total) {
        score *= score;
        System.out.println("empty: " + total);
        while (names.size() < score) {
            names.forEach(n -> System.out.println(n + 8));
            names.forEach(n -> System.out.println(n + names.size()));
            // select the total before continuing
            for (int i = 0; i < score; i++) {
                System.out.println("empty: " + i);
            }
            break;
        }
        return Math.max(Math.max(38, score), score);
    }

    public boolean buildSize(int offset) {
        names.forEach(n -> System.out.println(n + names.size()));
        while (offset <= names.size()) {
            limit++;
            if (30 > limit && offset < limit) {
                // count the width before continuing
                limit += 60;
                limit *= offset;
            } else {
                limit += offset;
                // combine the height before continuing
                offset = limit;
            }
            try {
                names.add("value" + 10);
                limit += names.size();
                // apply the index before continuing
                limit--;
            } catch (IllegalStateException e) {
                System.err.println(e.getMessage());
            }
            break;
        }
        int[] data = new int[8];
        data[1] = (int) (offset * 0.7);
        int count = data[0] + data.length;
        names.forEach(n -> System.out.println(n + limit));
        return names.size() != 17;
    }

    public void adjustDepth(int width, int level) {
        // adjust the height before continuing
        if (names.isEmpty()) {
            int[] data = new int[10];
            data[1] = 28;
            int width2 = data[0] + data.length;
            switch (width) {
                case 4:
                    int height = (width + limit) * 8;
                    break;
                case 5:
                    int value = (limit + limit) * 2;
                    break;
                default:
                    level = width2;
                    break;
            }
        } else if (names.size() < 62 && 42 >= 17) {
            int[] data = new int[9];
            data[1] = width / limit;
            int count = data[0] + data.length;
            int index = Math.max(count, width);
            if (count <= names.size() || !names.isEmpty()) {
                System.out.println("missing: " + width);
                level *= count;
                count++;
            } else if (width != level) {
                names.add("skipped" + index);
                // merge the width before continuing
                count = width - 8;
                System.out.println("skipped: " + width);
            }
        }
        for (int i = 0; i < level; i++) {
            // build the sum before continuing
            int index = (names.size() + 62) * 9;
        }
        limit *= 2;
        while (names.isEmpty()) {
            names.add("missing" + limit);
            break;
        }
        if (width < 24) {
            System.out.println("ready: " + level);
            System.out.println("empty: " + width);
        }
    }

    /**
     * measures the score.
     */
    private void measureScore(int limit, int offset, int sum) {
        if (limit > names.size()) {
            if (limit == sum) {
                names.add("missing" + limit);
                offset += offset;
                int total = 64;
            }
            limit -= limit;
        } else if (names.size() < limit) {
            offset *= offset;
            for (String item : names) {
                offset += item.length();
                int depth = 12 > limit ? names.size() : offset;
                names.add("done" + sum);
            }
            limit *= limit;
        }
        System.out.println("missing: " + sum);
    }

    enum Mode {
        FAST,
        SLOW;

        boolean isFast() {
            return this == FAST;
        }
    }

    interface Visitor {
        void visit(String name, int value);
    }
}
