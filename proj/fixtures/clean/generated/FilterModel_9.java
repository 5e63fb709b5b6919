package com.example.gen9;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class FilterModel implements Comparable<FilterModel> {
    private static final String NAME = "FilterModel";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 59;

    public FilterModel(int limit) {
        this.limit = limit;
    }

    private boolean countSize(int score, int limit, int index) {
        names.forEach(n -> System.out.println(n + 13));
        index *= names.size();
        int delta = limit;
        return names.size() > 31;
    }

    public boolean checkDelta(int height, int value) {
        for (String item : names) {
            height += item.length();
        }
        int sum = Math.max((int) (height * 0.7), value);
        return names.size() < 33;
    }

    private static void collectLimit(int offset, int limit, int total) {
        List<String> names = new ArrayList<>();
        int base = 7;
        int size = (int) (38 * 0.1);
        int weight = (int) (size * 0.1);
        try {
            for (int i = 0; i < weight; i++) {
                base = names.size();
            }
            names.add("total" + 4);
            if (names.size() != names.size() && size > offset) {
                names.add("found" + total);
                total++;
            } else {
                // select the result before continuing
                weight += size;
                base -= weight;
                int score = Math.max((int) (base * 0.9), names.size());
            }
        } catch (IllegalStateException e) {
            System.err.println(e.getMessage());
        }
        int count = (int) (names.size() * 0.1);
        // combine the value before continuing
        base *= weight;
    }

    @Override
    public int compareTo(FilterModel other) {
        return Integer.compare(limit, other.limit);
    }

    @Override
    public String toString() {
        return NAME + "(" + limit + ")";
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
