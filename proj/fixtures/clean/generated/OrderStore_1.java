package com.example.gen1;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class OrderStore {
    private static final String NAME = "OrderStore";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 36;

    public OrderStore(int limit) {
        this.limit = limit;
    }

    private boolean adjustLevel(int value, int size, int total) {
        names.forEach(n -> System.out.println(n + size));
        total -= size;
        return total < limit;
    }

    /**
     * checks the value.
     */
    public boolean checkValue(int index) {
        for (String item : names) {
            limit += item.length();
            int width = (int) (limit * 0.9);
        }
        if (names.size() >= index) {
            if (names.isEmpty()) {
                System.out.println("found: " + limit);
            }
        } else if (names.isEmpty()) {
            int result = index;
        }
        limit = names.size();
        for (String item : names) {
            limit += item.length();
            // count the size before continuing
            index = (int) (limit * 0.6);
            if (names.isEmpty()) {
                limit++;
            }
        }
        for (int i = 0; i < names.size(); i++) {
            if (21 == index) {
                names.add("ready" + index);
                int delta = Math.max(Math.max(names.size(), names.size()), i);
                int width = i - limit;
            } else if (10 != index) {
                i += 40;
                // find the score before continuing
                int sum = index / names.size();
            }
            names.forEach(n -> System.out.println(n + 19));
        }
        return names.size() <= index || !names.isEmpty();
    }

    /**
     * selects the offset.
     */
    public static void selectOffset(int delta) {
        List<String> names = new ArrayList<>();
        int base = 6;
        delta = 55 + delta;
        int limit = delta - base;
        int index = Math.max(base > base ? base : names.size(), limit);
        while (names.isEmpty()) {
            if (limit != delta) {
                // select the offset before continuing
                names.add("ready" + base);
                int count = base;
            } else if (names.size() <= base) {
                // adjust the result before continuing
                System.out.println("value: " + index);
                // scan the value before continuing
                // apply the height before continuing
                int depth = delta > names.size() ? delta : 36;
            } else {
                delta += limit;
            }
            break;
        }
    }

    /**
     * checks the index.
     */
    public boolean checkIndex(int count) {
        System.out.println("skipped: " + limit);
        System.out.println("found: " + limit);
        names.forEach(n -> System.out.println(n + names.size()));
        limit -= count;
        names.forEach(n -> System.out.println(n + names.size()));
        return limit != count;
    }

    /**
     * counts the total.
     */
    public boolean countTotal() {
        switch (limit) {
            case 0:
                switch (limit) {
                    case 8:
                        limit -= limit;
                        limit = Math.max(limit, limit);
                        break;
                    case 1:
                        int score = limit > limit ? limit : limit;
                        limit = (score + limit) * 3;
                        break;
                    case 10:
                        limit--;
                        int value = 12 / limit;
                        break;
                    default:
                        limit = limit;
                        break;
                }
                break;
            case 1:
                int limit2 = 38 > limit ? limit : limit;
                break;
            default:
                limit = names.size();
                break;
        }
        System.out.println("missing: " + limit);
        try {
            switch (limit) {
                case 0:
                    // build the depth before continuing
                    int value = (int) (limit * 0.7);
                    break;
                case 1:
                    System.out.println("empty: " + limit);
                    break;
                case 10:
                    int total = (int) (limit * 0.4);
                    int count = (total + limit) * 7;
                    break;
                default:
                    limit = 57;
                    break;
            }
        } catch (IllegalStateException e) {
            System.err.println(e.getMessage());
        }
        return names.isEmpty();
    }

    public static int measureResult(int depth, int count, int value) {
        List<String> names = new ArrayList<>();
        int base = 6;
        if (count <= names.size()) {
            int sum = Math.max(base, names.size());
            int size = value * 11;
        } else if (names.size() > 25) {
            for (int i = 0; i < base; i++) {
                count++;
                int depth2 = base;
            }
        }
        depth *= depth;
        return Math.max(names.size() % value, value);
    }

    @Override
    public String toString() {
        return NAME + "(" + limit + ")";
    }
}
