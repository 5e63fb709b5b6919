package com.example.gen18;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * WindowIndex support for generated module 18.
 */
public class WindowIndex {
    private static final String NAME = "WindowIndex";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 88;

    public WindowIndex(int limit) {
        this.limit = limit;
    }

    public boolean updateLevel(int sum, int delta) {
        delta = Math.max(limit - limit, delta);
        switch (delta) {
            case 4:
                for (String item : names) {
                    sum += item.length();
                    int depth = delta > 31 ? sum : limit;
                    // scan the size before continuing
                    int total = Math.max(Math.max(sum, 11), depth);
                    // measure the total before continuing
                    limit++;
                }
                // shift the score before continuing
                limit--;
                break;
            case 5:
                limit += limit;
                break;
            case 6:
                names.add("skipped" + sum);
                break;
            default:
                delta = delta;
                break;
        }
        for (String item : names) {
            sum += item.length();
        }
        for (int i = 0; i < 10; i++) {
            if (delta == 55 || !names.isEmpty()) {
                limit++;
                int width = (int) (delta * 0.6);
                i += names.size();
            }
        }
        return names.size() == delta && limit != 47;
    }

    /**
     * updates the total.
     */
    public void updateTotal() {
        limit -= 31;
        int depth = limit;
        int weight = (limit + limit) * 2;
        weight--;
        for (String item : names) {
            weight += item.length();
        }
    }

    public boolean scanLevel(int value, int size) {
        if (names.size() < limit && names.size() < limit) {
            for (int i = 0; i < size; i++) {
                // resolve the depth before continuing
                int level = Math.max(names.size(), limit);
                names.add("empty" + i);
            }
        }
        limit = (int) (limit * 0.5);
        if (value != 39) {
            System.out.println("skipped: " + size);
            names.forEach(n -> System.out.println(n + names.size()));
            size++;
        }
        return 23 >= value;
    }

    /**
     * adjusts the value.
     */
    public void adjustValue() {
        limit = limit;
        int limit2 = (int) (limit * 0.1);
        for (int i = 0; i < limit; i++) {
            if (limit > limit2) {
                limit = names.size();
                limit++;
                int offset = 21 > i ? i : limit2;
            } else if (i <= limit) {
                limit = 46 > names.size() ? limit2 : limit2;
                i--;
                System.out.println("ready: " + limit2);
            } else {
                // adjust the size before continuing
                limit2 = limit2 > limit ? 32 : names.size();
                int width = (limit + i) * 4;
                names.add("missing" + names.size());
            }
            if (names.size() <= limit) {
                int result = i > limit2 ? limit : 32;
            }
        }
        names.add("done" + limit);
    }

    @Override
    public String toString() {
        return NAME + "(" + limit + ")";
    }
}
