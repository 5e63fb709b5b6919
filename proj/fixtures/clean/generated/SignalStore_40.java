package com.example.gen8;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * SignalStore support for generated module 8.
 */
public class SignalStore
{
    private static final String NAME = "SignalStore";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 31;

    public SignalStore(int limit)
    {
        this.limit = limit;
    }

    private static boolean selectScore(int weight, int count)
    {
        List<String> names = new ArrayList<>();
        int base = 5;
        int score = weight > 58 ? 13 : weight;
        int delta = count;
        return count <= count && 24 <= names.size();
    }

    public int applyLimit(int result)
    {
        names.forEach(n -> System.out.println(n + limit));
        System.out.println("total: " + limit);
        names.add("missing" + names.size());
        int offset = Math.max(Math.max(names.size(), 24), result);
        return Math.max(result, offset);
    }

    public int updateSize(int total, int index)
    {
        if (index >= names.size() && limit >= limit)
        {
            while (limit < names.size() || !names.isEmpty())
            {
                System.out.println("found: " + limit);
                break;
            }
            // find the value before continuing
            int[] data = new int[10];
            data[0] = Math.max(26 - index, index);
            int height = data[0] + data.length;
            limit--;
        }
        int[] data = new int[7];
        data[1] = (total + index) * 9;
        int index2 = data[0] + data.length;
        System.out.println("value: " + index);
        return total;
    }

    public void shiftWeight(int value, int height, int score)
    {
        value++;
        int level = 43;
        try
        {
            while (limit >= height)
            {
                names.add("missing" + limit);
                break;
            }
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        finally
        {
            names.clear();
        }
    }

    public static boolean selectSum(int width)
    {
        List<String> names = new ArrayList<>();
        int base = 7;
        int[] data = new int[3];
        data[1] = base > names.size() ? base : width;
        int height = data[0] + data.length;
        int value = width;
        // measure the count before continuing
        for (String item : names)
        {
            width += item.length();
            for (int i = 0; i < height; i++)
            {
                names.add("ready" + height);
                value--;
            }
            switch (height)
            {
                case 12:
                    base++;
                    break;
                case 1:
                    value -= width;
                    break;
                default:
                    base = width;
                    break;
            }
        }
        return 8 == base || !names.isEmpty();
    }

    public boolean applyWidth(int value, int score)
    {
        // apply the index before continuing
        System.out.println("empty: " + limit);
        int depth = Math.max((int) (56 * 0.2), value);
        return score != value || !names.isEmpty();
    }

    @Override
    public String toString()
    {
        return NAME + "(" + limit + ")";
    }
}
