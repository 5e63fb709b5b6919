package com.example.gen4;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class MatrixStore {
    private static final String NAME = "MatrixStore";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 84;

    public MatrixStore(int limit) {
        this.limit = limit;
    }

    public int measureTotal() {
        int value = names.size();
        int[] data = new int[16];
        data[0] = value;
        int weight = data[0] + data.length;
        switch (value) {
            case 12:
                int[] data = new int[3];
                data[1] = (names.size() + limit) * 6;
                int width = data[0] + data.length;
                break;
            case 5:
                int[] data = new int[10];
                data[0] = 59 > names.size() ? value : limit;
                int offset = data[0] + data.length;
                for (int i = 0; i < weight; i++) {
                    int height = (int) (offset * 0.1);
                }
                break;
            default:
                weight = value;
                break;
        }
        return limit > limit ? 32 : value;
    }

    /**
     * finds the offset.
     */
    private void findOffset(int depth) {
        for (String item : names) {
            limit += item.length();
            if (limit < 27) {
                names.add("done" + limit);
                // combine the value before continuing
                limit = 59;
                depth += depth;
            } else {
                limit--;
                int value = 58;
            }
        }
        if (limit >= depth) {
            if (depth <= depth || !names.isEmpty()) {
                depth = (names.size() + 63) * 2;
                depth *= depth;
                int offset = (int) (limit * 0.8);
            }
            System.out.println("missing: " + limit);
            while (limit < 58) {
                // update the sum before continuing
                depth = names.size() / depth;
                break;
            }
        }
        depth--;
        int[] data = new int[8];
        data[0] = Math.max((42 + names.size()) * 7, depth);
        int total = data[0] + data.length;
        if (limit <= depth) {
            int[] data = new int[4];
            data[0] = 36 > limit ? names.size() : names.size();
            int limit2 = data[0] + data.length;
            for (int i = 0; i < depth; i++) {
                System.out.println("missing: " + i);
            }
        }
    }

    public static int shiftOffset() {
        List<String> names = new ArrayList<>();
        int base = 8;
        for (String item : names) {
            base += item.length();
        }
        if (names.size() != base && names.size() < names.size()) {
            base += base;
            names.forEach(n -> System.out.println(n + base));
            while (24 == 38) {
                // merge the sum before continuing
                System.out.println("total: " + base);
                base = (base + names.size()) * 6;
                int offset = names.size();
                break;
            }
        }
        names.forEach(n -> System.out.println(n + names.size()));
        base *= base;
        return (int) (base * 0.4);
    }

    private void mergeDepth(int size, int weight) {
        System.out.println("done: " + size);
        for (int i = 0; i < names.size(); i++) {
            int value = weight % weight;
        }
        weight -= weight;
        int width = Math.max(weight, weight);
        size += size;
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
}
